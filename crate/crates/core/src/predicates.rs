//! Filtered orientation and in-circle predicates.
//!
//! The fast path evaluates the determinant in double precision and accepts its
//! sign when it clears a forward error bound. Otherwise the determinant is
//! recomputed exactly with floating-point expansions (sums of non-overlapping
//! doubles), so the returned sign is always the sign of the exact determinant
//! of the input coordinates.

use alloc::vec::Vec;

use crate::geom::Point;

const EPSILON: f64 = f64::EPSILON * 0.5;
const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
const CCW_ERR_BOUND: f64 = (3.0 + 16.0 * EPSILON) * EPSILON;
const ICC_ERR_BOUND: f64 = (10.0 + 96.0 * EPSILON) * EPSILON;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let x = a + b;
    let bv = x - a;
    let av = x - bv;
    (x, (a - av) + (b - bv))
}

#[inline]
fn two_diff(a: f64, b: f64) -> (f64, f64) {
    let x = a - b;
    let bv = a - x;
    let av = x + bv;
    (x, (a - av) + (bv - b))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let c = SPLITTER * a;
    let big = c - a;
    let hi = c - big;
    (hi, a - hi)
}

#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let x = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err = x - ahi * bhi - alo * bhi - ahi * blo;
    (x, alo * blo - err)
}

/// Expansion: components ordered by increasing magnitude, zeros eliminated.
type Expansion = Vec<f64>;

fn grow(e: &[f64], b: f64) -> Expansion {
    let mut out = Vec::with_capacity(e.len() + 1);
    let mut q = b;
    for &c in e {
        let (sum, err) = two_sum(q, c);
        if err != 0.0 {
            out.push(err);
        }
        q = sum;
    }
    if q != 0.0 || out.is_empty() {
        out.push(q);
    }
    out
}

fn add(e: &[f64], f: &[f64]) -> Expansion {
    let mut out: Expansion = e.to_vec();
    for &c in f {
        out = grow(&out, c);
    }
    out
}

fn negate(e: &[f64]) -> Expansion {
    e.iter().map(|c| -c).collect()
}

fn scale(e: &[f64], b: f64) -> Expansion {
    let mut out = Vec::with_capacity(2 * e.len());
    if e.is_empty() {
        return out;
    }
    let (mut q, err) = two_product(e[0], b);
    if err != 0.0 {
        out.push(err);
    }
    for &c in &e[1..] {
        let (p1, p0) = two_product(c, b);
        let (sum, err) = two_sum(q, p0);
        if err != 0.0 {
            out.push(err);
        }
        let (nq, err) = two_sum(p1, sum);
        if err != 0.0 {
            out.push(err);
        }
        q = nq;
    }
    if q != 0.0 || out.is_empty() {
        out.push(q);
    }
    out
}

fn mul(e: &[f64], f: &[f64]) -> Expansion {
    let mut out: Expansion = Vec::new();
    for &c in f {
        out = add(&out, &scale(e, c));
    }
    out
}

fn sign(e: &[f64]) -> f64 {
    e.iter().rev().copied().find(|c| *c != 0.0).unwrap_or(0.0)
}

fn diff(a: f64, b: f64) -> Expansion {
    let (x, y) = two_diff(a, b);
    let mut v = Vec::with_capacity(2);
    if y != 0.0 {
        v.push(y);
    }
    v.push(x);
    v
}

#[cold]
#[inline(never)]
fn orient_exact(a: Point, b: Point, c: Point) -> f64 {
    let acx = diff(a.x, c.x);
    let bcy = diff(b.y, c.y);
    let acy = diff(a.y, c.y);
    let bcx = diff(b.x, c.x);
    let left = mul(&acx, &bcy);
    let right = mul(&acy, &bcx);
    sign(&add(&left, &negate(&right)))
}

/// Twice the signed area of `abc`: positive when counter-clockwise. The sign
/// is exact; the magnitude is the double-precision estimate unless the
/// filter fails, in which case only the sign (as ±1 or 0) is meaningful.
#[inline]
pub fn orient2d(a: Point, b: Point, c: Point) -> f64 {
    let detleft = (a.x - c.x) * (b.y - c.y);
    let detright = (a.y - c.y) * (b.x - c.x);
    let det = detleft - detright;
    let errbound = CCW_ERR_BOUND * (detleft.abs() + detright.abs());
    if det > errbound || -det > errbound {
        det
    } else {
        orient_exact(a, b, c)
    }
}

fn incircle_exact(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let adx = diff(a.x, d.x);
    let ady = diff(a.y, d.y);
    let bdx = diff(b.x, d.x);
    let bdy = diff(b.y, d.y);
    let cdx = diff(c.x, d.x);
    let cdy = diff(c.y, d.y);
    let alift = add(&mul(&adx, &adx), &mul(&ady, &ady));
    let blift = add(&mul(&bdx, &bdx), &mul(&bdy, &bdy));
    let clift = add(&mul(&cdx, &cdx), &mul(&cdy, &cdy));
    let bc = add(&mul(&bdx, &cdy), &negate(&mul(&cdx, &bdy)));
    let ca = add(&mul(&cdx, &ady), &negate(&mul(&adx, &cdy)));
    let ab = add(&mul(&adx, &bdy), &negate(&mul(&bdx, &ady)));
    let det = add(&add(&mul(&alift, &bc), &mul(&blift, &ca)), &mul(&clift, &ab));
    sign(&det)
}

/// Positive when `d` lies strictly inside the circle through the
/// counter-clockwise triangle `abc`, negative outside, zero on the circle.
pub fn incircle(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let adx = a.x - d.x;
    let bdx = b.x - d.x;
    let cdx = c.x - d.x;
    let ady = a.y - d.y;
    let bdy = b.y - d.y;
    let cdy = c.y - d.y;

    let bdxcdy = bdx * cdy;
    let cdxbdy = cdx * bdy;
    let alift = adx * adx + ady * ady;
    let cdxady = cdx * ady;
    let adxcdy = adx * cdy;
    let blift = bdx * bdx + bdy * bdy;
    let adxbdy = adx * bdy;
    let bdxady = bdx * ady;
    let clift = cdx * cdx + cdy * cdy;

    let det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    let permanent = (bdxcdy.abs() + cdxbdy.abs()) * alift
        + (cdxady.abs() + adxcdy.abs()) * blift
        + (adxbdy.abs() + bdxady.abs()) * clift;
    let errbound = ICC_ERR_BOUND * permanent;
    if det > errbound || -det > errbound {
        det
    } else {
        incircle_exact(a, b, c, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_signs() {
        assert!(orient2d(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)) > 0.0);
        assert!(orient2d(p(0.0, 0.0), p(0.0, 1.0), p(1.0, 1.0)) < 0.0);
        assert_eq!(orient2d(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)), 0.0);
    }

    #[test]
    fn orient_near_collinear_is_exact() {
        // Classic failure case for naive evaluation: points on y = x with tiny offsets.
        let a = p(0.5, 0.5);
        let b = p(12.0, 12.0);
        let c = p(24.0, 24.0);
        assert_eq!(orient2d(a, b, c), 0.0);
        let tiny = p(0.5 + f64::EPSILON, 0.5);
        assert!(orient2d(tiny, b, c) < 0.0);
        let tiny_up = p(0.5, 0.5 + f64::EPSILON);
        assert!(orient2d(tiny_up, b, c) > 0.0);
    }

    #[test]
    fn incircle_signs() {
        let (a, b, c) = (p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0));
        assert!(incircle(a, b, c, p(0.5, 0.5)) > 0.0);
        assert!(incircle(a, b, c, p(3.0, 3.0)) < 0.0);
        assert_eq!(incircle(a, b, c, p(1.0, 1.0)), 0.0);
    }

    #[test]
    fn incircle_cocircular_large_offset() {
        let o = 1.0e6;
        let (a, b, c) = (p(o, o), p(o + 2.0, o), p(o + 2.0, o + 2.0));
        assert_eq!(incircle(a, b, c, p(o, o + 2.0)), 0.0);
        assert!(incircle(a, b, c, p(o, o + 2.0 - 1e-9)) > 0.0);
    }
}
