//! Numerical analyzer for closed plane curves: arc length, maximum diameter,
//! smallest chord through the region centroid, enclosed area and centroid,
//! plus the derived inequality probes L/D <= pi <= L/d and dD > A and the
//! quadratic x^2 - (L/2)x + A = 0.
//!
//! Curves are sampled to closed polylines. The diameter uses convex hull plus
//! rotating calipers; the central chord restricts to curves star-shaped about
//! the centroid, found by a direction sweep refined by golden-section search.

use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum JordanError {
    #[error("curve parameter must be positive, got {0}")]
    NonPositiveParameter(f64),
    #[error("sample count must be at least 64, got {0}")]
    TooFewSamples(usize),
    #[error("polyline needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("polyline is self-intersecting (segments {0} and {1} cross)")]
    SelfIntersecting(usize, usize),
    #[error("polyline is degenerate (zero enclosed area)")]
    ZeroArea,
    #[error("all points are collinear")]
    Collinear,
    #[error("curve is not star-shaped about its centroid (ray at angle {0} hits the boundary {1} times)")]
    NotStarShaped(f64, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }

    fn cross(&self, o: &Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn dist(&self, o: &Point2) -> f64 {
        ((self.x - o.x).powi(2) + (self.y - o.y).powi(2)).sqrt()
    }
}

/// Built-in shapes plus arbitrary user polylines.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveKind {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    /// Reuleaux triangle of the given constant width.
    Reuleaux { width: f64 },
    Polyline(Vec<Point2>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub kind: CurveKind,
    pub samples: usize,
}

impl CurveSpec {
    pub fn new(kind: CurveKind, samples: usize) -> Result<Self, JordanError> {
        if samples < 64 {
            return Err(JordanError::TooFewSamples(samples));
        }
        match &kind {
            CurveKind::Circle { radius } => check_positive(*radius)?,
            CurveKind::Ellipse { a, b } => {
                check_positive(*a)?;
                check_positive(*b)?;
            }
            CurveKind::Reuleaux { width } => check_positive(*width)?,
            CurveKind::Polyline(points) => validate_polyline(points)?,
        }
        Ok(Self { kind, samples })
    }
}

fn check_positive(v: f64) -> Result<(), JordanError> {
    if !(v > 0.0) {
        return Err(JordanError::NonPositiveParameter(v));
    }
    Ok(())
}

fn validate_polyline(points: &[Point2]) -> Result<(), JordanError> {
    if points.len() < 3 {
        return Err(JordanError::TooFewPoints(points.len()));
    }
    let n = points.len();
    // pairwise segment crossing check; adjacent segments share an endpoint
    // and are exempt
    for i in 0..n {
        for j in (i + 1)..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (points[i], points[(i + 1) % n]);
            let (c, d) = (points[j], points[(j + 1) % n]);
            if segments_cross(&a, &b, &c, &d) {
                return Err(JordanError::SelfIntersecting(i, j));
            }
        }
    }
    Ok(())
}

fn segments_cross(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let d1 = b.sub(a).cross(&c.sub(a));
    let d2 = b.sub(a).cross(&d.sub(a));
    let d3 = d.sub(c).cross(&a.sub(c));
    let d4 = d.sub(c).cross(&b.sub(c));
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

/// Samples the curve to a closed polyline of N points in traversal order
/// (the closing edge from last back to first is implicit). For the polyline
/// kind the given vertices are returned unchanged.
pub fn sample(spec: &CurveSpec) -> Vec<Point2> {
    let n = spec.samples;
    match &spec.kind {
        CurveKind::Circle { radius } => (0..n)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / n as f64;
                Point2::new(radius * t.cos(), radius * t.sin())
            })
            .collect(),
        CurveKind::Ellipse { a, b } => (0..n)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / n as f64;
                Point2::new(a * t.cos(), b * t.sin())
            })
            .collect(),
        CurveKind::Reuleaux { width } => sample_reuleaux(*width, n),
        CurveKind::Polyline(points) => points.clone(),
    }
}

fn sample_reuleaux(width: f64, n: usize) -> Vec<Point2> {
    // equilateral triangle of side = width, centroid at the origin
    let circumradius = width / 3f64.sqrt();
    let vertices: Vec<Point2> = (0..3)
        .map(|k| {
            let ang = PI / 2.0 + 2.0 * PI * k as f64 / 3.0;
            Point2::new(circumradius * ang.cos(), circumradius * ang.sin())
        })
        .collect();
    let per_arc = n / 3;
    let mut points = Vec::with_capacity(per_arc * 3);
    // arc i is centered at vertex i and runs from vertex i+1 to vertex i+2
    for i in 0..3 {
        let center = vertices[i];
        let from = vertices[(i + 1) % 3];
        let to = vertices[(i + 2) % 3];
        let a0 = (from.y - center.y).atan2(from.x - center.x);
        let a1 = (to.y - center.y).atan2(to.x - center.x);
        let mut sweep = a1 - a0;
        while sweep <= 0.0 {
            sweep += 2.0 * PI;
        }
        if sweep > PI {
            sweep -= 2.0 * PI; // take the 60-degree arc, not the long way
        }
        for k in 0..per_arc {
            let ang = a0 + sweep * k as f64 / per_arc as f64;
            points.push(Point2::new(
                center.x + width * ang.cos(),
                center.y + width * ang.sin(),
            ));
        }
    }
    if signed_area(&points) < 0.0 {
        points.reverse();
    }
    points
}

/// Total length of the closed polyline.
pub fn arc_length(polyline: &[Point2]) -> f64 {
    let n = polyline.len();
    (0..n)
        .map(|i| polyline[i].dist(&polyline[(i + 1) % n]))
        .sum()
}

fn signed_area(polyline: &[Point2]) -> f64 {
    let n = polyline.len();
    0.5 * (0..n)
        .map(|i| {
            let p = polyline[i];
            let q = polyline[(i + 1) % n];
            p.x * q.y - q.x * p.y
        })
        .sum::<f64>()
}

/// Enclosed area (absolute) and centroid of the region, by the shoelace and
/// polygon-centroid formulas.
pub fn region_centroid_area(polyline: &[Point2]) -> Result<(Point2, f64), JordanError> {
    let a = signed_area(polyline);
    if a.abs() < 1e-300 {
        return Err(JordanError::ZeroArea);
    }
    let n = polyline.len();
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let p = polyline[i];
        let q = polyline[(i + 1) % n];
        let w = p.x * q.y - q.x * p.y;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    let centroid = Point2::new(cx / (6.0 * a), cy / (6.0 * a));
    Ok((centroid, a.abs()))
}

/// Andrew's monotone chain; returns the hull in counterclockwise order.
pub fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|p, q| p.x.partial_cmp(&q.x).unwrap().then(p.y.partial_cmp(&q.y).unwrap()));
    pts.dedup_by(|p, q| p.x == q.x && p.y == q.y);
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Point2, a: &Point2, b: &Point2| a.sub(o).cross(&b.sub(o));
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Maximum pairwise distance via rotating calipers on the convex hull.
pub fn max_diameter(polyline: &[Point2]) -> Result<f64, JordanError> {
    if polyline.len() < 3 {
        return Err(JordanError::TooFewPoints(polyline.len()));
    }
    let hull = convex_hull(polyline);
    if hull.len() < 2 {
        return Err(JordanError::Collinear);
    }
    if hull.len() == 2 {
        return Err(JordanError::Collinear);
    }
    let m = hull.len();
    let mut best = 0.0f64;
    let mut j = 1;
    for i in 0..m {
        let edge = hull[(i + 1) % m].sub(&hull[i]);
        // advance the antipodal point while the supporting area grows
        loop {
            let next = (j + 1) % m;
            let cur = edge.cross(&hull[j].sub(&hull[i]));
            let adv = edge.cross(&hull[next].sub(&hull[i]));
            if adv > cur {
                j = next;
            } else {
                break;
            }
        }
        best = best.max(hull[i].dist(&hull[j]));
        best = best.max(hull[(i + 1) % m].dist(&hull[j]));
    }
    Ok(best)
}

/// O(N^2) diameter; independent oracle for the calipers path.
pub fn max_diameter_brute(polyline: &[Point2]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..polyline.len() {
        for j in (i + 1)..polyline.len() {
            best = best.max(polyline[i].dist(&polyline[j]));
        }
    }
    best
}

/// Intersection of the ray from `origin` at angle `theta` with the boundary.
/// Errors unless the ray meets the boundary exactly once (the star-shaped
/// requirement).
fn ray_boundary_point(
    polyline: &[Point2],
    origin: &Point2,
    theta: f64,
) -> Result<Point2, JordanError> {
    let u = Point2::new(theta.cos(), theta.sin());
    let n = polyline.len();
    let mut hits: Vec<(f64, Point2)> = Vec::new();
    for i in 0..n {
        let a = polyline[i];
        let b = polyline[(i + 1) % n];
        let d = b.sub(&a);
        let denom = u.cross(&d);
        if denom.abs() < 1e-15 {
            continue;
        }
        let ao = a.sub(origin);
        let t = ao.cross(&d) / denom;
        let s = ao.cross(&u) / denom;
        // slightly widened [0, 1] so a hit exactly on a shared vertex cannot
        // fall between both segments; the dedup below collapses the double
        // count by t
        if t > 1e-12 && s >= -1e-9 && s <= 1.0 + 1e-9 {
            hits.push((t, Point2::new(origin.x + t * u.x, origin.y + t * u.y)));
        }
    }
    hits.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    hits.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 * (1.0 + q.0));
    match hits.len() {
        1 => Ok(hits[0].1),
        k => Err(JordanError::NotStarShaped(theta, k)),
    }
}

fn chord_length(polyline: &[Point2], centroid: &Point2, theta: f64) -> Result<f64, JordanError> {
    let p = ray_boundary_point(polyline, centroid, theta)?;
    let q = ray_boundary_point(polyline, centroid, theta + PI)?;
    Ok(p.dist(&q))
}

/// Smallest chord through the centroid: coarse sweep over 1024 directions in
/// [0, pi), then golden-section refinement of the best bracket to 1e-8 in
/// theta.
pub fn min_central_chord(polyline: &[Point2], centroid: &Point2) -> Result<f64, JordanError> {
    const SWEEP: usize = 1024;
    let step = PI / SWEEP as f64;
    let mut best_i = 0;
    let mut best = f64::INFINITY;
    let mut values = [0.0f64; SWEEP];
    for (i, v) in values.iter_mut().enumerate() {
        *v = chord_length(polyline, centroid, i as f64 * step)?;
        if *v < best {
            best = *v;
            best_i = i;
        }
    }
    // golden-section on the bracket around the sweep minimum
    let mut lo = (best_i as f64 - 1.0) * step;
    let mut hi = (best_i as f64 + 1.0) * step;
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = chord_length(polyline, centroid, x1)?;
    let mut f2 = chord_length(polyline, centroid, x2)?;
    while hi - lo > 1e-8 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = chord_length(polyline, centroid, x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = chord_length(polyline, centroid, x2)?;
        }
    }
    Ok(best.min(f1).min(f2))
}

/// Samples of the central-chord function, for plot-data emission.
pub fn chord_profile(
    polyline: &[Point2],
    centroid: &Point2,
    directions: usize,
) -> Result<Vec<(f64, f64)>, JordanError> {
    (0..directions)
        .map(|i| {
            let theta = PI * i as f64 / directions as f64;
            chord_length(polyline, centroid, theta).map(|c| (theta, c))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveMetrics {
    pub length: f64,
    pub max_diameter: f64,
    pub min_central_chord: f64,
    pub area: f64,
    pub centroid: Point2,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadraticRoots {
    ComplexPair,
    Double(f64),
    Real(f64, f64),
}

/// Evaluation of the inequality probes and the quadratic, with signed
/// margins so reports carry how close each inequality is.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub ratio_l_over_diameter: f64,
    pub ratio_l_over_chord: f64,
    /// pi - L/D >= 0
    pub ineq_i_left_margin: f64,
    pub ineq_i_left_holds: bool,
    /// L/d - pi >= 0
    pub ineq_i_right_margin: f64,
    pub ineq_i_right_holds: bool,
    /// dD - A > 0
    pub ineq_iii_margin: f64,
    pub ineq_iii_holds: bool,
    pub quadratic_discriminant: f64,
    pub quadratic_roots: QuadraticRoots,
}

/// Computes all metrics and evaluates the probes for one curve spec.
pub fn analyze(spec: &CurveSpec) -> Result<(CurveMetrics, ConjectureReport), JordanError> {
    let polyline = sample(spec);
    let length = arc_length(&polyline);
    let diameter = max_diameter(&polyline)?;
    let (centroid, area) = region_centroid_area(&polyline)?;
    let chord = min_central_chord(&polyline, &centroid)?;
    let metrics = CurveMetrics {
        length,
        max_diameter: diameter,
        min_central_chord: chord,
        area,
        centroid,
    };
    let ratio_l_over_diameter = length / diameter;
    let ratio_l_over_chord = length / chord;
    let ineq_i_left_margin = PI - ratio_l_over_diameter;
    let ineq_i_right_margin = ratio_l_over_chord - PI;
    let ineq_iii_margin = chord * diameter - area;
    let disc = (length / 2.0).powi(2) - 4.0 * area;
    let roots = if disc < 0.0 {
        QuadraticRoots::ComplexPair
    } else if disc == 0.0 {
        QuadraticRoots::Double(length / 4.0)
    } else {
        let sq = disc.sqrt();
        QuadraticRoots::Real((length / 2.0 - sq) / 2.0, (length / 2.0 + sq) / 2.0)
    };
    let report = ConjectureReport {
        ratio_l_over_diameter,
        ratio_l_over_chord,
        ineq_i_left_margin,
        ineq_i_left_holds: ineq_i_left_margin >= 0.0,
        ineq_i_right_margin,
        ineq_i_right_holds: ineq_i_right_margin >= 0.0,
        ineq_iii_margin,
        ineq_iii_holds: ineq_iii_margin > 0.0,
        quadratic_discriminant: disc,
        quadratic_roots: roots,
    };
    Ok((metrics, report))
}

/// Complete elliptic integral of the second kind E(m) by the AGM iteration.
///
/// Used as an independent oracle for ellipse circumference 4 a E(m); it
/// shares no code with the polyline arc-length path.
pub fn complete_elliptic_e(m: f64) -> f64 {
    let mut a = 1.0f64;
    let mut b = (1.0 - m).sqrt();
    let mut c = m.sqrt();
    let mut sum = 0.5 * c * c;
    let mut pow2 = 1.0;
    while c.abs() > 1e-16 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        pow2 *= 2.0;
        sum += 0.5 * pow2 * c * c;
    }
    let k = PI / (2.0 * a);
    k * (1.0 - sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(r: f64, n: usize) -> CurveSpec {
        CurveSpec::new(CurveKind::Circle { radius: r }, n).unwrap()
    }

    fn ellipse(a: f64, b: f64, n: usize) -> CurveSpec {
        CurveSpec::new(CurveKind::Ellipse { a, b }, n).unwrap()
    }

    fn square(side: f64) -> Vec<Point2> {
        let h = side / 2.0;
        vec![
            Point2::new(-h, -h),
            Point2::new(h, -h),
            Point2::new(h, h),
            Point2::new(-h, h),
        ]
    }

    /// Complete elliptic integral of the second kind E(m) by the AGM
    /// iteration; independent oracle for ellipse circumference 4 a E(m).
    fn elliptic_e_agm(m: f64) -> f64 {
        let mut a = 1.0f64;
        let mut b = (1.0 - m).sqrt();
        let mut c = m.sqrt();
        let mut sum = 0.5 * c * c;
        let mut pow2 = 1.0;
        while c.abs() > 1e-16 {
            let an = 0.5 * (a + b);
            let bn = (a * b).sqrt();
            c = 0.5 * (a - b);
            a = an;
            b = bn;
            pow2 *= 2.0;
            sum += 0.5 * pow2 * c * c;
        }
        let k = PI / (2.0 * a);
        k * (1.0 - sum)
    }

    #[test]
    fn spec_validation() {
        assert!(CurveSpec::new(CurveKind::Circle { radius: 0.0 }, 128).is_err());
        assert!(CurveSpec::new(CurveKind::Circle { radius: 1.0 }, 32).is_err());
        // bowtie self-intersects
        let bowtie = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ];
        assert!(matches!(
            CurveSpec::new(CurveKind::Polyline(bowtie), 64),
            Err(JordanError::SelfIntersecting(_, _))
        ));
        assert!(CurveSpec::new(CurveKind::Polyline(square(1.0)), 64).is_ok());
    }

    #[test]
    fn sample_shapes() {
        let pts = sample(&circle(1.0, 4096));
        for p in &pts {
            assert!((p.dist(&Point2::new(0.0, 0.0)) - 1.0).abs() < 1e-12);
        }
        let pts = sample(&ellipse(2.0, 1.0, 4096));
        for p in &pts {
            assert!(p.x.abs() <= 2.0 + 1e-12 && p.y.abs() <= 1.0 + 1e-12);
        }
        // constant width: no pair further apart than the width
        let pts = sample(&CurveSpec::new(CurveKind::Reuleaux { width: 1.0 }, 1024).unwrap());
        assert!(max_diameter_brute(&pts) <= 1.0 + 1e-6);
    }

    #[test]
    fn arc_length_against_oracles() {
        let l = arc_length(&sample(&circle(1.0, 4096)));
        assert!((l - 2.0 * PI).abs() / (2.0 * PI) < 1e-5);

        let l = arc_length(&sample(&ellipse(2.0, 1.0, 8192)));
        let oracle = 4.0 * 2.0 * elliptic_e_agm(1.0 - 0.25);
        assert!((oracle - 9.688448).abs() < 1e-5);
        assert!((l - oracle).abs() < 1e-4, "l={l} oracle={oracle}");

        let l = arc_length(&sample(
            &CurveSpec::new(CurveKind::Reuleaux { width: 1.0 }, 4096).unwrap(),
        ));
        assert!((l - PI).abs() < 1e-4, "l={l}");
    }

    #[test]
    fn diameter_calipers_matches_brute_force() {
        assert!((max_diameter(&sample(&circle(1.0, 512))).unwrap() - 2.0).abs() < 1e-6);
        assert!((max_diameter(&sample(&ellipse(2.0, 1.0, 512))).unwrap() - 4.0).abs() < 1e-6);

        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            // random convex polygon: hull of random points
            let pts: Vec<Point2> = (0..40)
                .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect();
            let hull = convex_hull(&pts);
            assert_eq!(
                max_diameter(&hull).unwrap(),
                max_diameter_brute(&hull),
                "hull = {hull:?}"
            );
        }
    }

    #[test]
    fn degenerate_diameter_input() {
        let collinear: Vec<Point2> =
            (0..10).map(|i| Point2::new(i as f64, 0.0)).collect();
        assert_eq!(max_diameter(&collinear), Err(JordanError::Collinear));
    }

    #[test]
    fn centroid_and_area() {
        let (c, a) = region_centroid_area(&sample(&circle(1.0, 4096))).unwrap();
        assert!(c.dist(&Point2::new(0.0, 0.0)) < 1e-9);
        assert!((a - PI).abs() < 1e-5);

        let (_, a) = region_centroid_area(&sample(&ellipse(2.0, 1.0, 4096))).unwrap();
        assert!((a - 2.0 * PI).abs() < 1e-5);

        let (c, a) = region_centroid_area(&square(3.0)).unwrap();
        assert_eq!(a, 9.0);
        assert_eq!(c, Point2::new(0.0, 0.0));
    }

    #[test]
    fn central_chords() {
        let pts = sample(&circle(1.0, 4096));
        let (c, _) = region_centroid_area(&pts).unwrap();
        assert!((min_central_chord(&pts, &c).unwrap() - 2.0).abs() < 1e-6);

        let pts = sample(&ellipse(2.0, 1.0, 4096));
        let (c, _) = region_centroid_area(&pts).unwrap();
        assert!((min_central_chord(&pts, &c).unwrap() - 2.0).abs() < 1e-5);

        // square of side 2: minimum chord through the center is 2
        let pts = square(2.0);
        let (c, _) = region_centroid_area(&pts).unwrap();
        let refined = min_central_chord(&pts, &c).unwrap();
        assert!((refined - 2.0).abs() < 1e-5);
        // brute sweep oracle
        let brute = chord_profile(&pts, &c, 4096)
            .unwrap()
            .into_iter()
            .map(|(_, c)| c)
            .fold(f64::INFINITY, f64::min);
        assert!(refined <= brute + 1e-9);
    }

    #[test]
    fn non_star_shaped_rejected() {
        // deep U shape whose centroid sits inside the notch
        let u = vec![
            Point2::new(0.0, 0.0),
            Point2::new(5.0, 0.0),
            Point2::new(5.0, 5.0),
            Point2::new(4.0, 5.0),
            Point2::new(4.0, 0.5),
            Point2::new(1.0, 0.5),
            Point2::new(1.0, 5.0),
            Point2::new(0.0, 5.0),
        ];
        let (c, _) = region_centroid_area(&u).unwrap();
        assert!(matches!(
            min_central_chord(&u, &c),
            Err(JordanError::NotStarShaped(_, _))
        ));
    }

    #[test]
    fn analyze_circle() {
        let (m, r) = analyze(&circle(1.0, 4096)).unwrap();
        assert!((m.length / m.max_diameter - PI).abs() < 1e-5);
        assert!((m.length / m.min_central_chord - PI).abs() < 1e-5);
        assert!((m.min_central_chord - m.max_diameter).abs() < 1e-6);
        assert!(((m.min_central_chord * m.max_diameter - m.area) - (4.0 - PI)).abs() < 1e-4);
        assert!(r.ineq_i_left_holds || r.ineq_i_left_margin.abs() < 1e-5);
        assert!(r.quadratic_discriminant < 0.0);
        assert_eq!(r.quadratic_roots, QuadraticRoots::ComplexPair);
    }

    #[test]
    fn analyze_ellipse() {
        let (m, r) = analyze(&ellipse(2.0, 1.0, 8192)).unwrap();
        assert!(r.ineq_i_left_holds && r.ineq_i_right_holds);
        assert!(r.ineq_i_left_margin > 0.5 && r.ineq_i_right_margin > 0.5);
        assert!((m.min_central_chord * m.max_diameter - 8.0).abs() < 1e-4);
        assert!(r.ineq_iii_holds);
    }

    #[test]
    fn analyze_reuleaux_equality_probe() {
        // a non-circle with L/D = pi
        let spec = CurveSpec::new(CurveKind::Reuleaux { width: 1.0 }, 4096).unwrap();
        let (m, _) = analyze(&spec).unwrap();
        assert!((m.length / m.max_diameter - PI).abs() < 1e-4);
        // d < D distinguishes it from the circle
        assert!(m.min_central_chord < m.max_diameter - 1e-3);
    }

    #[test]
    fn vieta_cross_check() {
        // long thin rectangle has real roots
        let rect = vec![
            Point2::new(0.0, 0.0),
            Point2::new(10.0, 0.0),
            Point2::new(10.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let spec = CurveSpec::new(CurveKind::Polyline(rect), 64).unwrap();
        let (m, r) = analyze(&spec).unwrap();
        if let QuadraticRoots::Real(r1, r2) = r.quadratic_roots {
            assert!(((r1 + r2) - m.length / 2.0).abs() / (m.length / 2.0) < 1e-8);
            assert!((r1 * r2 - m.area).abs() / m.area < 1e-8);
        } else {
            panic!("expected real roots, got {:?}", r.quadratic_roots);
        }
    }

    #[test]
    fn convergence_under_refinement() {
        for kind in [
            CurveKind::Circle { radius: 1.0 },
            CurveKind::Ellipse { a: 2.0, b: 1.0 },
            CurveKind::Reuleaux { width: 1.0 },
        ] {
            let coarse = sample(&CurveSpec::new(kind.clone(), 2048).unwrap());
            let fine = sample(&CurveSpec::new(kind, 4096).unwrap());
            let (l0, l1) = (arc_length(&coarse), arc_length(&fine));
            assert!((l1 - l0).abs() / l1 < 1e-3);
            let a0 = region_centroid_area(&coarse).unwrap().1;
            let a1 = region_centroid_area(&fine).unwrap().1;
            assert!((a1 - a0).abs() / a1 < 1e-3);
        }
    }
}
