//! Planar and spatial convex-geometry primitives used by the metrics and the
//! sampling oracle: shoelace areas, monotone-chain hulls, point-to-edge
//! distances, and an incremental 3D convex hull for volume measurement.

use nalgebra::{Vector2, Vector3};

/// Signed shoelace area of a polygon given in vertex order.
///
/// Positive for counterclockwise orientation.
pub fn signed_polygon_area(vertices: &[Vector2<f64>]) -> f64 {
    if vertices.len() < 3 {
        return 0.0;
    }
    let mut twice_area = 0.0;
    for (j, v) in vertices.iter().enumerate() {
        let w = vertices[(j + 1) % vertices.len()];
        twice_area += v.x * w.y - w.x * v.y;
    }
    twice_area / 2.0
}

/// Absolute shoelace area of a polygon given in vertex order.
pub fn polygon_area(vertices: &[Vector2<f64>]) -> f64 {
    signed_polygon_area(vertices).abs()
}

/// Distance from a point to the segment `[a, b]`.
pub fn point_segment_distance(p: Vector2<f64>, a: Vector2<f64>, b: Vector2<f64>) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let s = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * s)).norm()
}

/// Whether the origin lies inside (or on the boundary of) a convex polygon
/// with counterclockwise vertex order.
pub fn origin_in_convex_polygon(vertices: &[Vector2<f64>], tol: f64) -> bool {
    if vertices.len() < 3 {
        return false;
    }
    for (j, a) in vertices.iter().enumerate() {
        let b = vertices[(j + 1) % vertices.len()];
        let edge = b - a;
        // origin on the left (interior) side of every CCW edge
        if edge.x * (-a.y) - edge.y * (-a.x) < -tol {
            return false;
        }
    }
    true
}

fn cross2(o: Vector2<f64>, a: Vector2<f64>, b: Vector2<f64>) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Convex hull of a planar point set via the monotone chain, returned in
/// counterclockwise order without repetition of the first vertex.
pub fn convex_hull_2d(points: &[Vector2<f64>]) -> Vec<Vector2<f64>> {
    let mut pts: Vec<Vector2<f64>> = points.to_vec();
    pts.sort_by(|p, q| {
        p.x.partial_cmp(&q.x)
            .unwrap()
            .then(p.y.partial_cmp(&q.y).unwrap())
    });
    pts.dedup_by(|p, q| p.x == q.x && p.y == q.y);
    let n = pts.len();
    if n <= 2 {
        return pts;
    }

    let mut hull: Vec<Vector2<f64>> = Vec::with_capacity(2 * n);
    for &p in pts.iter() {
        while hull.len() >= 2 && cross2(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len && cross2(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Drop hull vertices whose adjacent edges are collinear within `area_tol`
/// (absolute triangle-area threshold). Used to count the dominant vertices of
/// sampled hulls whose edges are stair-stepped at the grid scale.
///
/// Removes the smallest-turn vertex one at a time so that clusters of nearly
/// collinear points collapse onto the true corners instead of vanishing
/// together.
pub fn simplify_collinear(hull: &[Vector2<f64>], area_tol: f64) -> Vec<Vector2<f64>> {
    let mut kept: Vec<Vector2<f64>> = hull.to_vec();
    while kept.len() > 3 {
        let m = kept.len();
        let (weakest, turn_area) = (0..m)
            .map(|j| {
                let prev = kept[(j + m - 1) % m];
                let here = kept[j];
                let after = kept[(j + 1) % m];
                (j, cross2(prev, here, after).abs() / 2.0)
            })
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .expect("non-empty hull");
        if turn_area > area_tol {
            break;
        }
        kept.remove(weakest);
    }
    kept
}

/// Six times the signed volume of the tetrahedron (a, b, c, d).
fn signed_volume6(
    a: Vector3<f64>,
    b: Vector3<f64>,
    c: Vector3<f64>,
    d: Vector3<f64>,
) -> f64 {
    (b - a).cross(&(c - a)).dot(&(d - a))
}

/// Volume of the convex hull of a 3D point set.
///
/// Incremental hull construction with outward-oriented faces, followed by a
/// divergence-theorem sum over the triangulated boundary. Coplanar or
/// lower-dimensional inputs yield zero.
pub fn convex_hull_volume_3d(points: &[Vector3<f64>]) -> f64 {
    let n = points.len();
    if n < 4 {
        return 0.0;
    }

    let scale = points
        .iter()
        .map(|p| p.abs().max())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let vol_tol = 1e-12 * scale * scale * scale;

    // Initial simplex: greedily pick four affinely independent points.
    let i0 = 0;
    let Some(i1) = (0..n).max_by(|&a, &b| {
        let da = (points[a] - points[i0]).norm_squared();
        let db = (points[b] - points[i0]).norm_squared();
        da.partial_cmp(&db).unwrap()
    }) else {
        return 0.0;
    };
    if (points[i1] - points[i0]).norm() <= 1e-12 * scale {
        return 0.0;
    }
    let Some(i2) = (0..n).max_by(|&a, &b| {
        let ca = (points[i1] - points[i0]).cross(&(points[a] - points[i0])).norm_squared();
        let cb = (points[i1] - points[i0]).cross(&(points[b] - points[i0])).norm_squared();
        ca.partial_cmp(&cb).unwrap()
    }) else {
        return 0.0;
    };
    if (points[i1] - points[i0])
        .cross(&(points[i2] - points[i0]))
        .norm()
        <= 1e-12 * scale * scale
    {
        return 0.0;
    }
    let Some(i3) = (0..n).max_by(|&a, &b| {
        let va = signed_volume6(points[i0], points[i1], points[i2], points[a]).abs();
        let vb = signed_volume6(points[i0], points[i1], points[i2], points[b]).abs();
        va.partial_cmp(&vb).unwrap()
    }) else {
        return 0.0;
    };
    if signed_volume6(points[i0], points[i1], points[i2], points[i3]).abs() <= vol_tol {
        return 0.0; // coplanar set
    }

    let interior = (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;
    let orient = |f: [usize; 3], p: Vector3<f64>| -> f64 {
        signed_volume6(points[f[0]], points[f[1]], points[f[2]], p)
    };
    let outward = |f: [usize; 3]| -> [usize; 3] {
        if orient(f, interior) < 0.0 {
            f
        } else {
            [f[0], f[2], f[1]]
        }
    };

    let mut faces: Vec<[usize; 3]> = vec![
        outward([i0, i1, i2]),
        outward([i0, i1, i3]),
        outward([i0, i2, i3]),
        outward([i1, i2, i3]),
    ];

    let seed = [i0, i1, i2, i3];
    for (p_idx, &p) in points.iter().enumerate() {
        if seed.contains(&p_idx) {
            continue;
        }
        let mut visible: Vec<usize> = Vec::new();
        for (fi, &f) in faces.iter().enumerate() {
            if orient(f, p) > vol_tol {
                visible.push(fi);
            }
        }
        if visible.is_empty() {
            continue; // interior or on the boundary
        }

        // Horizon: directed edges of visible faces whose reverse is not also
        // a visible-face edge.
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * visible.len());
        for &fi in &visible {
            let [a, b, c] = faces[fi];
            edges.push((a, b));
            edges.push((b, c));
            edges.push((c, a));
        }
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in &edges {
            if !edges.contains(&(v, u)) {
                horizon.push((u, v));
            }
        }

        let mut keep: Vec<[usize; 3]> = Vec::with_capacity(faces.len());
        for (fi, &f) in faces.iter().enumerate() {
            if !visible.contains(&fi) {
                keep.push(f);
            }
        }
        for (u, v) in horizon {
            keep.push(outward([u, v, p_idx]));
        }
        faces = keep;
    }

    let mut volume6 = 0.0;
    for &f in &faces {
        // outward faces make a negative tetra with the interior reference
        volume6 -= orient(f, interior);
    }
    volume6 / 6.0
}
