//! Rectangles, segments, partitions and grid partitions, quartering, and
//! the canonical counter-clockwise boundary circuit.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::path::LoopPath;

/// Axis-parallel closed rectangle with strictly positive width and height.
///
/// Vertices are derived counter-clockwise from the lower-left corner, so
/// `vertices()[0]` is `re_lo + i*im_lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rectangle {
    re_lo: f64,
    re_hi: f64,
    im_lo: f64,
    im_hi: f64,
}

impl Rectangle {
    pub fn new(re_lo: f64, re_hi: f64, im_lo: f64, im_hi: f64) -> Result<Self> {
        for v in [re_lo, re_hi, im_lo, im_hi] {
            if !v.is_finite() {
                return Err(Error::DegenerateRectangle(format!(
                    "non-finite coordinate {v}"
                )));
            }
        }
        if re_lo >= re_hi || im_lo >= im_hi {
            return Err(Error::DegenerateRectangle(format!(
                "need re_lo < re_hi and im_lo < im_hi, got [{re_lo},{re_hi}] x [{im_lo},{im_hi}]"
            )));
        }
        Ok(Rectangle {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        })
    }

    /// Square centered at `c` with the given half side length.
    pub fn centered_square(c: Complex, half_side: f64) -> Result<Self> {
        Rectangle::new(
            c.re - half_side,
            c.re + half_side,
            c.im - half_side,
            c.im + half_side,
        )
    }

    pub fn re_lo(&self) -> f64 {
        self.re_lo
    }
    pub fn re_hi(&self) -> f64 {
        self.re_hi
    }
    pub fn im_lo(&self) -> f64 {
        self.im_lo
    }
    pub fn im_hi(&self) -> f64 {
        self.im_hi
    }

    pub fn width(&self) -> f64 {
        self.re_hi - self.re_lo
    }

    pub fn height(&self) -> f64 {
        self.im_hi - self.im_lo
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * (self.width() + self.height())
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    pub fn center(&self) -> Complex {
        Complex::new(
            self.re_lo + 0.5 * self.width(),
            self.im_lo + 0.5 * self.height(),
        )
    }

    pub fn is_square(&self) -> bool {
        (self.width() - self.height()).abs() <= 1e-12 * self.width().max(self.height())
    }

    /// Vertices (a, b, c, d) counter-clockwise from the lower-left corner.
    pub fn vertices(&self) -> [Complex; 4] {
        [
            Complex::new(self.re_lo, self.im_lo),
            Complex::new(self.re_hi, self.im_lo),
            Complex::new(self.re_hi, self.im_hi),
            Complex::new(self.re_lo, self.im_hi),
        ]
    }

    /// The four oriented boundary sides, counter-clockwise from the bottom.
    pub fn sides(&self) -> [Segment; 4] {
        let [a, b, c, d] = self.vertices();
        [
            Segment::new(a, b).expect("nondegenerate by construction"),
            Segment::new(b, c).expect("nondegenerate by construction"),
            Segment::new(c, d).expect("nondegenerate by construction"),
            Segment::new(d, a).expect("nondegenerate by construction"),
        ]
    }

    pub fn contains(&self, z: Complex) -> bool {
        self.re_lo <= z.re && z.re <= self.re_hi && self.im_lo <= z.im && z.im <= self.im_hi
    }

    pub fn interior_contains(&self, z: Complex) -> bool {
        self.re_lo < z.re && z.re < self.re_hi && self.im_lo < z.im && z.im < self.im_hi
    }

    /// Euclidean distance from `z` to the boundary (0 on the boundary,
    /// positive elsewhere, inside or outside).
    pub fn boundary_distance(&self, z: Complex) -> f64 {
        if self.contains(z) {
            (z.re - self.re_lo)
                .min(self.re_hi - z.re)
                .min(z.im - self.im_lo)
                .min(self.im_hi - z.im)
        } else {
            let dx = (self.re_lo - z.re).max(0.0).max(z.re - self.re_hi);
            let dy = (self.im_lo - z.im).max(0.0).max(z.im - self.im_hi);
            dx.hypot(dy)
        }
    }

    pub fn intersects_interior(&self, other: &Rectangle) -> bool {
        self.re_lo < other.re_hi
            && other.re_lo < self.re_hi
            && self.im_lo < other.im_hi
            && other.im_lo < self.im_hi
    }

    /// The four congruent quarters obtained by joining midpoints of
    /// opposite sides, in canonical order SW, SE, NW, NE.
    pub fn quarters(&self) -> [Rectangle; 4] {
        let rm = self.re_lo + 0.5 * self.width();
        let im = self.im_lo + 0.5 * self.height();
        let q = |a, b, c, d| Rectangle {
            re_lo: a,
            re_hi: b,
            im_lo: c,
            im_hi: d,
        };
        [
            q(self.re_lo, rm, self.im_lo, im),
            q(rm, self.re_hi, self.im_lo, im),
            q(self.re_lo, rm, im, self.im_hi),
            q(rm, self.re_hi, im, self.im_hi),
        ]
    }

    /// Scales width and height by `factor` about the center.
    pub fn inflate(&self, factor: f64) -> Result<Rectangle> {
        let c = self.center();
        let hw = 0.5 * self.width() * factor;
        let hh = 0.5 * self.height() * factor;
        Rectangle::new(c.re - hw, c.re + hw, c.im - hh, c.im + hh)
    }

    /// The circuit traversing the boundary once counter-clockwise, with
    /// corner times 0, 1/4, 1/2, 3/4 and start at the lower-left corner.
    pub fn boundary_circuit(&self) -> LoopPath {
        let vs = self.vertices();
        LoopPath::from_fn_unchecked(move |t| {
            let scaled = 4.0 * t;
            let i = (scaled.floor() as usize).min(3);
            let local = scaled - i as f64;
            let a = vs[i];
            let b = vs[(i + 1) % 4];
            Ok(a + (b - a) * local)
        })
    }
}

/// Straight segment from `a` to a different point `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Complex,
    pub b: Complex,
}

impl Segment {
    pub fn new(a: Complex, b: Complex) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::DegenerateSegment(a));
        }
        if a == b {
            return Err(Error::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b,
            b: self.a,
        }
    }

    pub fn length(&self) -> f64 {
        (self.b - self.a).abs()
    }

    pub fn midpoint(&self) -> Complex {
        (self.a + self.b) * 0.5
    }

    pub fn point_at(&self, t: f64) -> Complex {
        self.a + (self.b - self.a) * t
    }

    /// Euclidean distance from `z` to the closed segment.
    pub fn distance_to(&self, z: Complex) -> f64 {
        let d = self.b - self.a;
        let w = z - self.a;
        let t = ((w.re * d.re + w.im * d.im) / d.norm_sqr()).clamp(0.0, 1.0);
        (z - self.point_at(t)).abs()
    }

    /// Splits at the midpoint into the two ordered halves.
    pub fn halves(&self) -> [Segment; 2] {
        let m = self.midpoint();
        [Segment { a: self.a, b: m }, Segment { a: m, b: self.b }]
    }
}

/// Ordered parameter values 0 = t_0 < ... < t_k = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    ts: Vec<f64>,
}

impl Partition {
    pub fn new(ts: Vec<f64>) -> Result<Self> {
        if ts.len() < 2 {
            return Err(Error::InvalidPartition("need at least two points".into()));
        }
        if ts.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidPartition("points must be finite".into()));
        }
        if ts[0] != 0.0 || *ts.last().unwrap() != 1.0 {
            return Err(Error::InvalidPartition(
                "must start at 0 and end at 1".into(),
            ));
        }
        if ts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidPartition("must be strictly increasing".into()));
        }
        Ok(Partition { ts })
    }

    /// Equally spaced parameters t_i = i/k.
    pub fn equipartition(k: usize) -> Self {
        assert!(k >= 1, "equipartition needs k >= 1");
        let ts = (0..=k).map(|i| i as f64 / k as f64).collect();
        Partition { ts }
    }

    pub fn points(&self) -> &[f64] {
        &self.ts
    }

    pub fn len(&self) -> usize {
        self.ts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mesh ||P||: the largest parameter step.
    pub fn mesh(&self) -> f64 {
        self.ts
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }
}

/// Grid partition of a rectangle by horizontal and vertical cut lines.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPartition {
    re_cuts: Vec<f64>,
    im_cuts: Vec<f64>,
}

impl GridPartition {
    /// `re_interior` and `im_interior` are the cut coordinates strictly
    /// inside the parent's span; the parent's own edges are added.
    pub fn new(parent: &Rectangle, re_interior: &[f64], im_interior: &[f64]) -> Result<Self> {
        let mut re_cuts = Vec::with_capacity(re_interior.len() + 2);
        re_cuts.push(parent.re_lo());
        re_cuts.extend_from_slice(re_interior);
        re_cuts.push(parent.re_hi());
        let mut im_cuts = Vec::with_capacity(im_interior.len() + 2);
        im_cuts.push(parent.im_lo());
        im_cuts.extend_from_slice(im_interior);
        im_cuts.push(parent.im_hi());
        if re_cuts.iter().chain(&im_cuts).any(|c| !c.is_finite()) {
            return Err(Error::InvalidGrid("cuts must be finite".into()));
        }
        if re_cuts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "re cuts must be strictly increasing inside the parent".into(),
            ));
        }
        if im_cuts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "im cuts must be strictly increasing inside the parent".into(),
            ));
        }
        Ok(GridPartition { re_cuts, im_cuts })
    }

    pub fn parent(&self) -> Rectangle {
        Rectangle {
            re_lo: self.re_cuts[0],
            re_hi: *self.re_cuts.last().unwrap(),
            im_lo: self.im_cuts[0],
            im_hi: *self.im_cuts.last().unwrap(),
        }
    }

    pub fn cells(&self) -> Vec<Rectangle> {
        let mut out = Vec::with_capacity((self.re_cuts.len() - 1) * (self.im_cuts.len() - 1));
        for jw in self.im_cuts.windows(2) {
            for iw in self.re_cuts.windows(2) {
                out.push(Rectangle {
                    re_lo: iw[0],
                    re_hi: iw[1],
                    im_lo: jw[0],
                    im_hi: jw[1],
                });
            }
        }
        out
    }
}

/// Area of a rectangle; positive by the type invariant.
pub fn area(r: &Rectangle) -> f64 {
    r.area()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn degenerate_rectangles_rejected() {
        assert!(Rectangle::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(Rectangle::new(1.0, 0.0, 0.0, 1.0).is_err());
        assert!(Rectangle::new(0.0, 1.0, 2.0, 2.0).is_err());
        assert!(Rectangle::new(0.0, f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn area_examples() {
        let unit = Rectangle::new(0.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(unit.area(), 1.0);
        // square with vertices +-1 +- i has side 2
        let sq = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        assert_eq!(sq.area(), 4.0);
    }

    #[test]
    fn grid_cell_areas_sum_to_parent() {
        let r = Rectangle::new(-1.0, 2.0, 0.5, 3.0).unwrap();
        let g = GridPartition::new(&r, &[0.0, 0.7, 1.9], &[1.0, 2.5]).unwrap();
        let total: f64 = g.cells().iter().map(Rectangle::area).sum();
        assert_abs_diff_eq!(total, r.area(), epsilon = 1e-12 * r.area());
        assert_eq!(g.cells().len(), 12);
    }

    #[test]
    fn boundary_circuit_corner_schedule() {
        let r = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let phi = r.boundary_circuit();
        assert_eq!(phi.at(0.0).unwrap(), Complex::new(-1.0, -1.0));
        assert_eq!(phi.at(0.25).unwrap(), Complex::new(1.0, -1.0));
        assert_eq!(phi.at(0.5).unwrap(), Complex::new(1.0, 1.0));
        assert_eq!(phi.at(0.75).unwrap(), Complex::new(-1.0, 1.0));
        assert_eq!(phi.at(1.0).unwrap(), Complex::new(-1.0, -1.0));
        // midpoint of the bottom side
        let mid = phi.at(0.125).unwrap();
        assert_abs_diff_eq!(mid.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(mid.im, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn boundary_circuit_injective_on_half_open_interval() {
        let r = Rectangle::new(0.0, 2.0, 0.0, 1.0).unwrap();
        let phi = r.boundary_circuit();
        let n = 257;
        let pts: Vec<Complex> = (0..n)
            .map(|i| phi.at(i as f64 / n as f64).unwrap())
            .collect();
        for i in 0..n {
            for j in (i + 1)..n {
                assert!(
                    (pts[i] - pts[j]).abs() > 1e-9,
                    "duplicate boundary point at {i}, {j}"
                );
            }
        }
    }

    #[test]
    fn quarters_of_standard_square() {
        let s = Rectangle::new(0.0, 2.0, 0.0, 2.0).unwrap();
        let q = s.quarters();
        assert_eq!(q[0], Rectangle::new(0.0, 1.0, 0.0, 1.0).unwrap());
        assert_eq!(q[1], Rectangle::new(1.0, 2.0, 0.0, 1.0).unwrap());
        assert_eq!(q[2], Rectangle::new(0.0, 1.0, 1.0, 2.0).unwrap());
        assert_eq!(q[3], Rectangle::new(1.0, 2.0, 1.0, 2.0).unwrap());
        for c in &q {
            assert_abs_diff_eq!(c.area(), s.area() / 4.0, epsilon = 1e-15);
            assert_abs_diff_eq!(c.perimeter(), s.perimeter() / 2.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn nested_quartering_halves_diameter() {
        let s = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let mut cur = s;
        for n in 1..=10 {
            cur = cur.quarters()[0];
            let expected = s.diameter() / (1u64 << n) as f64;
            assert_abs_diff_eq!(cur.diameter(), expected, epsilon = 1e-12 * expected);
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![0.0, 0.5, 1.0]).is_ok());
        assert!(Partition::new(vec![0.0, 1.0]).is_ok());
        assert!(Partition::new(vec![0.1, 0.5, 1.0]).is_err());
        assert!(Partition::new(vec![0.0, 0.5, 0.5, 1.0]).is_err());
        assert!(Partition::new(vec![0.0]).is_err());
        let p = Partition::equipartition(4);
        assert_abs_diff_eq!(p.mesh(), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn segment_distance() {
        let s = Segment::new(Complex::new(0.0, 0.0), Complex::new(2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(s.distance_to(Complex::new(1.0, 1.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.distance_to(Complex::new(3.0, 0.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.distance_to(Complex::new(1.0, 0.0)), 0.0, epsilon = 1e-15);
    }

    proptest! {
        /// Disjoint-interior packing: grid sub-collections never exceed the
        /// parent area, and full grids match it exactly.
        #[test]
        fn grid_packing_bounds(
            cuts_re in proptest::collection::vec(0.01f64..0.99, 0..5),
            cuts_im in proptest::collection::vec(0.01f64..0.99, 0..5),
            mask in proptest::collection::vec(any::<bool>(), 36),
        ) {
            let parent = Rectangle::new(0.0, 1.0, 0.0, 1.0).unwrap();
            let mut re: Vec<f64> = cuts_re;
            re.sort_by(f64::total_cmp);
            re.dedup();
            let mut im: Vec<f64> = cuts_im;
            im.sort_by(f64::total_cmp);
            im.dedup();
            let grid = GridPartition::new(&parent, &re, &im).unwrap();
            let cells = grid.cells();
            let full: f64 = cells.iter().map(Rectangle::area).sum();
            prop_assert!((full - parent.area()).abs() <= 1e-12 * parent.area());
            let packed: f64 = cells
                .iter()
                .zip(mask.iter())
                .filter(|(_, keep)| **keep)
                .map(|(c, _)| c.area())
                .sum();
            prop_assert!(packed <= parent.area() * (1.0 + 1e-12));
        }

        /// Quarters always tile the parent: disjoint interiors, union equals
        /// the parent, each with half the width and height.
        #[test]
        fn quarters_tile(
            re_lo in -10.0f64..10.0, w in 0.1f64..5.0,
            im_lo in -10.0f64..10.0, h in 0.1f64..5.0,
        ) {
            let r = Rectangle::new(re_lo, re_lo + w, im_lo, im_lo + h).unwrap();
            let q = r.quarters();
            let total: f64 = q.iter().map(Rectangle::area).sum();
            prop_assert!((total - r.area()).abs() <= 1e-12 * r.area());
            for i in 0..4 {
                prop_assert!((q[i].width() - r.width() / 2.0).abs() <= 1e-12 * r.width());
                prop_assert!((q[i].height() - r.height() / 2.0).abs() <= 1e-12 * r.height());
                for j in (i + 1)..4 {
                    prop_assert!(!q[i].intersects_interior(&q[j]));
                }
            }
        }
    }
}
