//! Discrete winding numbers.
//!
//! Points are projected radially onto the perimeter-1 square centered at
//! the base point p (lower-left corner p - 1/8 - i/8). The winding sum adds
//! signed shorter-arc lengths between consecutive projected samples; for a
//! full-span partition the sum is an integer, and refining the partition
//! makes it eventually constant. The lifting construction (accumulating a
//! continuous real arc coordinate and taking g(1) - g(0)) serves as the
//! independent oracle.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::geometry::Partition;
use crate::integrate::RefinementConfig;
use crate::path::LoopPath;

/// Distance below which a sampled loop point counts as hitting the base
/// point.
pub const POINT_GUARD: f64 = 1e-12;

/// Arc steps must stay below this for a winding computation to be
/// accepted; the telescoping argument needs arcs shorter than 1/2, and 1/4
/// inherits the slack the proofs use.
pub const ARC_STEP_LIMIT: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingResult {
    pub value: i64,
    /// Final equipartition size.
    pub partition_size: usize,
    /// Largest |signed arc| between consecutive samples at acceptance.
    pub max_arc_step: f64,
}

/// Radial projection of q onto the boundary of the perimeter-1 square
/// centered at p. The dominant coordinate lands on +-1/8 exactly.
pub fn project_to_square(q: Complex, p: Complex) -> Result<Complex> {
    let dr = q.re - p.re;
    let di = q.im - p.im;
    if dr == 0.0 && di == 0.0 {
        return Err(Error::LoopHitsPoint { t: f64::NAN });
    }
    let (x, y) = if dr.abs() >= di.abs() {
        (f64::copysign(0.125, dr), (di / dr.abs()) * 0.125)
    } else {
        ((dr / di.abs()) * 0.125, f64::copysign(0.125, di))
    };
    Ok(Complex::new(p.re + x, p.im + y))
}

/// Counter-clockwise boundary length from the lower-left corner of the
/// projection square to `r`, in [0, 1). Side lengths are 1/4 each.
pub fn arc_coordinate(r: Complex, p: Complex) -> Result<f64> {
    let dx = r.re - p.re;
    let dy = r.im - p.im;
    let maxc = dx.abs().max(dy.abs());
    if (maxc - 0.125).abs() > 1e-12 {
        return Err(Error::PointNotOnBoundary(r));
    }
    let l = if dx.abs() >= dy.abs() {
        if dx > 0.0 {
            // right side, upward from the lower-right corner
            0.25 + (dy + 0.125)
        } else {
            // left side, downward from the upper-left corner
            0.75 + (0.125 - dy)
        }
    } else if dy < 0.0 {
        // bottom side, rightward from the lower-left corner
        dx + 0.125
    } else {
        // top side, leftward from the upper-right corner
        0.5 + (0.125 - dx)
    };
    let l = l.rem_euclid(1.0);
    Ok(if l == 1.0 { 0.0 } else { l })
}

/// Arc-coordinate difference folded into (-1/2, 1/2]; ties at the
/// antipode get the + sign.
fn fold_increment(d: f64) -> f64 {
    let d = d.rem_euclid(1.0);
    if d <= 0.5 {
        d
    } else {
        d - 1.0
    }
}

/// Signed shorter-arc length from r to s on the boundary of the
/// projection square around p: positive counter-clockwise, +1/2 at the
/// antipodal tie.
pub fn signed_arc(r: Complex, s: Complex, p: Complex) -> Result<f64> {
    let lr = arc_coordinate(r, p)?;
    let ls = arc_coordinate(s, p)?;
    Ok(fold_increment(ls - lr))
}

fn arc_of_sample(z: Complex, p: Complex, t: f64) -> Result<f64> {
    if (z - p).abs() < POINT_GUARD {
        return Err(Error::LoopHitsPoint { t });
    }
    let proj = project_to_square(z, p)?;
    arc_coordinate(proj, p)
}

/// Winding sum W(P, f, p): the sum of signed arcs between consecutive
/// square-projected samples of the loop.
pub fn winding_sum(f: &LoopPath, p: Complex, partition: &Partition) -> Result<f64> {
    let ts = partition.points();
    let mut prev = arc_of_sample(f.at(ts[0])?, p, ts[0])?;
    let mut total = 0.0;
    for &t in &ts[1..] {
        let cur = arc_of_sample(f.at(t)?, p, t)?;
        total += fold_increment(cur - prev);
        prev = cur;
    }
    Ok(total)
}

struct LevelSummary {
    winding: f64,
    max_step: f64,
}

fn summarize(arcs: &[f64]) -> LevelSummary {
    let mut winding = 0.0;
    let mut max_step: f64 = 0.0;
    for w in arcs.windows(2) {
        let inc = fold_increment(w[1] - w[0]);
        winding += inc;
        max_step = max_step.max(inc.abs());
    }
    LevelSummary { winding, max_step }
}

/// Winding number by equipartition doubling. Accepts once the maximal
/// projected arc step drops below 1/4 and the rounded integer has agreed
/// across two consecutive doublings; a final pass checks the loop stays
/// clear of p at four times the accepted resolution.
pub fn winding_number(f: &LoopPath, p: Complex, cfg: &RefinementConfig) -> Result<WindingResult> {
    cfg.validate()?;
    let mut k = cfg.k_min.max(1);
    let mut arcs: Vec<f64> = (0..=k)
        .map(|j| {
            let t = j as f64 / k as f64;
            arc_of_sample(f.at(t)?, p, t)
        })
        .collect::<Result<_>>()?;
    let mut summary = summarize(&arcs);
    let mut history = vec![summary.winding.round() as i64];
    loop {
        let stable = history.len() >= 3 && {
            let last = &history[history.len() - 3..];
            last[0] == last[1] && last[1] == last[2]
        };
        if stable && summary.max_step < ARC_STEP_LIMIT {
            // oversampled guard at 4x the accepted resolution
            let fine = 4 * k;
            for j in 0..=fine {
                let t = j as f64 / fine as f64;
                if (f.at(t)? - p).abs() < POINT_GUARD {
                    return Err(Error::LoopHitsPoint { t });
                }
            }
            return Ok(WindingResult {
                value: *history.last().unwrap(),
                partition_size: k,
                max_arc_step: summary.max_step,
            });
        }
        if k.checked_mul(2).map(|kk| kk > cfg.k_max).unwrap_or(true) {
            return Err(Error::NoStabilization { k_max: cfg.k_max });
        }
        k *= 2;
        let mut next = Vec::with_capacity(k + 1);
        for j in 0..=k {
            if j % 2 == 0 {
                next.push(arcs[j / 2]);
            } else {
                let t = j as f64 / k as f64;
                next.push(arc_of_sample(f.at(t)?, p, t)?);
            }
        }
        arcs = next;
        summary = summarize(&arcs);
        history.push(summary.winding.round() as i64);
    }
}

/// The lifting oracle: accumulates nearest-representative increments of
/// the arc coordinate along a fixed equipartition and returns
/// round(g(1) - g(0)). Errors if any increment reaches 1/4.
pub fn winding_number_lifted(f: &LoopPath, p: Complex, steps: usize) -> Result<i64> {
    assert!(steps >= 1, "need at least one step");
    let mut prev = {
        let z = f.at(0.0)?;
        arc_of_sample(z, p, 0.0)?
    };
    let mut lifted = prev;
    for j in 1..=steps {
        let t = j as f64 / steps as f64;
        let cur = arc_of_sample(f.at(t)?, p, t)?;
        let inc = fold_increment(cur - prev);
        if inc.abs() >= ARC_STEP_LIMIT {
            return Err(Error::StepTooCoarse { step: inc.abs() });
        }
        lifted += inc;
        prev = cur;
    }
    let start = {
        let z = f.at(0.0)?;
        arc_of_sample(z, p, 0.0)?
    };
    Ok((lifted - start).round() as i64)
}
