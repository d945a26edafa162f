//! Exact integer plane predicates. Coordinates are `i64`; intermediate products use `i128`.

use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

/// Twice the signed area of triangle `abc`: positive for a left turn.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.x as i128, a.y as i128);
    let (bx, by) = (b.x as i128, b.y as i128);
    let (cx, cy) = (c.x as i128, c.y as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0 && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed-segment intersection test.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Compares the counterclockwise angle in `[0, 360)` of two nonzero direction vectors.
pub fn cmp_angle(a: (i64, i64), b: (i64, i64)) -> Ordering {
    fn half(d: (i64, i64)) -> u8 {
        if d.1 > 0 || (d.1 == 0 && d.0 > 0) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// Closed-region membership for a (possibly self-touching) closed polyline.
///
/// Points on the boundary are inside. Elsewhere the even-odd rule is applied with a
/// rightward ray; a segment counts as crossed when its endpoints lie strictly on
/// opposite sides of the ray's line under the half-open convention, so horizontal
/// segments and doubled-back spikes contribute nothing.
pub fn in_closed_region(p: Point, boundary: &[Point]) -> bool {
    let n = boundary.len();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return boundary[0] == p;
    }
    let segments = || (0..n).map(move |i| (boundary[i], boundary[(i + 1) % n]));
    if segments().any(|(a, b)| on_segment(p, a, b)) {
        return true;
    }
    let mut inside = false;
    for (a, b) in segments() {
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the crossing compared with p.x, exactly
            let o = orient(a, b, p);
            let crosses_right = if b.y > a.y { o > 0 } else { o < 0 };
            if crosses_right {
                inside = !inside;
            }
        }
    }
    inside
}
