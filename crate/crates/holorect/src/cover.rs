//! Quadtree covers: finite König-style cover extraction for closed target
//! sets, countable maximal-element covers, and the binary-tree analogue
//! for segments.
//!
//! The module is purely combinatorial: predicates close over whatever
//! sampling the caller chooses, and no user function is evaluated here.
//! Children are always enumerated SW, SE, NW, NE, so identical inputs
//! produce identical output lists.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geometry::{Rectangle, Segment};

/// Default expansion depth; quadtree cells below ~1e-12 of the root scale
/// are numerically meaningless in f64.
pub const DEFAULT_MAX_DEPTH: u32 = 40;

/// Verdict of the target-set test A(S). `Unknown` is expanded
/// conservatively, exactly like `Nonempty`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetVerdict {
    Empty,
    Nonempty,
    Unknown,
}

/// Membership test F(S) plus target test A(S) over quadtree squares.
///
/// For the finite cover to terminate F must be "locally eventually true"
/// on the target: around each target point some scale at which every small
/// containing square is in F. A violation surfaces as depth exhaustion.
pub struct SquarePredicate<F, A>
where
    F: Fn(&Rectangle) -> bool,
    A: Fn(&Rectangle) -> SetVerdict,
{
    pub in_family: F,
    pub target: A,
}

impl<F, A> SquarePredicate<F, A>
where
    F: Fn(&Rectangle) -> bool,
    A: Fn(&Rectangle) -> SetVerdict,
{
    pub fn new(in_family: F, target: A) -> Self {
        SquarePredicate { in_family, target }
    }
}

/// A square of the quadtree with its depth; depth 0 is the root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadNode {
    pub square: Rectangle,
    pub depth: u32,
}

pub struct CountableCover {
    /// Maximal qualifying squares, in canonical discovery order.
    pub cells: Vec<Rectangle>,
    /// Squares at max depth that still met the target without qualifying.
    pub truncated: Vec<Rectangle>,
}

fn require_square(root: &Rectangle) -> Result<()> {
    if !root.is_square() {
        return Err(Error::NotSquare {
            width: root.width(),
            height: root.height(),
        });
    }
    Ok(())
}

/// Finite cover of a closed target set: expands the subtree of squares
/// that meet the target but are not yet in the family, and collects the
/// family members hanging off it. Termination is exactly the absence of
/// an infinite branch; running out of depth reports the offending nested
/// chain as the witness.
pub fn konig_finite_cover<F, A>(
    root: &Rectangle,
    pred: &SquarePredicate<F, A>,
    max_depth: u32,
) -> Result<Vec<Rectangle>>
where
    F: Fn(&Rectangle) -> bool,
    A: Fn(&Rectangle) -> SetVerdict,
{
    require_square(root)?;
    if (pred.target)(root) == SetVerdict::Empty {
        return Ok(Vec::new());
    }
    if (pred.in_family)(root) {
        return Ok(vec![*root]);
    }
    // arena of expanded (non-family, target-meeting) nodes with parent links
    let mut arena: Vec<(Rectangle, Option<usize>, u32)> = vec![(*root, None, 0)];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let mut cover = Vec::new();
    while let Some(idx) = queue.pop_front() {
        let (sq, _, depth) = arena[idx];
        if depth >= max_depth {
            let mut chain = Vec::new();
            let mut cur = Some(idx);
            while let Some(i) = cur {
                chain.push(arena[i].0);
                cur = arena[i].1;
            }
            chain.reverse();
            return Err(Error::DepthExhausted { chain });
        }
        for child in sq.quarters() {
            if (pred.target)(&child) == SetVerdict::Empty {
                continue;
            }
            if (pred.in_family)(&child) {
                cover.push(child);
            } else {
                arena.push((child, Some(idx), depth + 1));
                queue.push_back(arena.len() - 1);
            }
        }
    }
    Ok(cover)
}

/// Maximal elements (under inclusion) of the family members that meet the
/// target, scanning the quadtree to `max_depth`. Never fails; cut-off
/// squares are reported in `truncated`.
pub fn countable_cover<F, A>(
    root: &Rectangle,
    pred: &SquarePredicate<F, A>,
    max_depth: u32,
) -> Result<CountableCover>
where
    F: Fn(&Rectangle) -> bool,
    A: Fn(&Rectangle) -> SetVerdict,
{
    require_square(root)?;
    let mut cells = Vec::new();
    let mut truncated = Vec::new();
    let mut queue: VecDeque<QuadNode> = VecDeque::from([QuadNode {
        square: *root,
        depth: 0,
    }]);
    while let Some(node) = queue.pop_front() {
        if (pred.target)(&node.square) == SetVerdict::Empty {
            continue;
        }
        if (pred.in_family)(&node.square) {
            cells.push(node.square);
            continue;
        }
        if node.depth >= max_depth {
            truncated.push(node.square);
            continue;
        }
        for child in node.square.quarters() {
            queue.push_back(QuadNode {
                square: child,
                depth: node.depth + 1,
            });
        }
    }
    Ok(CountableCover { cells, truncated })
}

/// Binary-halving analogue of `konig_finite_cover` for segments. The
/// returned subsegments are ordered along the parent segment.
pub fn segment_cover<F, A>(
    parent: &Segment,
    in_family: F,
    target: A,
    max_depth: u32,
) -> Result<Vec<Segment>>
where
    F: Fn(&Segment) -> bool,
    A: Fn(&Segment) -> SetVerdict,
{
    if target(parent) == SetVerdict::Empty {
        return Ok(Vec::new());
    }
    if in_family(parent) {
        return Ok(vec![*parent]);
    }
    let mut queue: VecDeque<(Segment, u32)> = VecDeque::from([(*parent, 0)]);
    let mut cover = Vec::new();
    while let Some((seg, depth)) = queue.pop_front() {
        if depth >= max_depth {
            return Err(Error::SegmentDepthExhausted { depth });
        }
        for half in seg.halves() {
            if target(&half) == SetVerdict::Empty {
                continue;
            }
            if in_family(&half) {
                cover.push(half);
            } else {
                queue.push_back((half, depth + 1));
            }
        }
    }
    // order along the parent by the start parameter
    let dir = parent.b - parent.a;
    let key = |s: &Segment| {
        let w = s.a - parent.a;
        w.re * dir.re + w.im * dir.im
    };
    cover.sort_by(|x, y| key(x).total_cmp(&key(y)));
    Ok(cover)
}
