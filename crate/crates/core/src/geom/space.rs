use crate::params::{Curvature, TilingParams};

/// Ambient coordinates of a plane point. Euclidean points live in the
/// affine plane `z = 1`; hyperbolic points on the upper hyperboloid sheet
/// `x^2 + y^2 - z^2 = -1`, `z > 0`. In both cases the projective map
/// `(x, y, z) -> (x/z, y/z)` is the Klein picture of the plane, and it
/// preserves the cyclic order of directions around any point.
pub type Point = [f64; 3];

/// 3x3 matrix acting on ambient coordinates; isometries of either model
/// are represented this way (affine maps in homogeneous form for the
/// Euclidean plane, Lorentz maps for the hyperboloid).
pub type Isometry = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Euclidean,
    Hyperbolic,
}

/// Minkowski form of signature (+, +, -); the hyperboloid sheet is
/// `B(x, x) = -1`.
pub fn minkowski(u: &Point, v: &Point) -> f64 {
    u[0] * v[0] + u[1] * v[1] - u[2] * v[2]
}

pub fn identity() -> Isometry {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub fn compose(a: &Isometry, b: &Isometry) -> Isometry {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn apply(m: &Isometry, p: &Point) -> Point {
    let mut out = [0.0; 3];
    for (i, o) in out.iter_mut().enumerate() {
        *o = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
    }
    out
}

impl Model {
    pub fn of(params: TilingParams) -> Model {
        match params.curvature() {
            Curvature::Euclidean => Model::Euclidean,
            Curvature::Hyperbolic => Model::Hyperbolic,
        }
    }

    pub fn origin(self) -> Point {
        [0.0, 0.0, 1.0]
    }

    /// Snap a point back onto the model surface (the z coordinate is
    /// redundant in both models), absorbing rounding drift.
    pub fn renormalize(self, p: Point) -> Point {
        match self {
            Model::Euclidean => [p[0] / p[2], p[1] / p[2], 1.0],
            Model::Hyperbolic => {
                [p[0], p[1], (1.0 + p[0] * p[0] + p[1] * p[1]).sqrt()]
            }
        }
    }

    /// Klein coordinates; the identity on the Euclidean plane.
    pub fn klein(self, p: &Point) -> [f64; 2] {
        [p[0] / p[2], p[1] / p[2]]
    }

    /// Circumradius of the face of `{p, q}`: for the hyperbolic plane
    /// `cosh R = cot(pi/p) cot(pi/q)`; Euclidean faces are normalized to
    /// edge length 1, so `R = 1 / (2 sin(pi/p))`.
    fn circumradius(self, p: u32, q: u32) -> f64 {
        let ap = std::f64::consts::PI / f64::from(p);
        let aq = std::f64::consts::PI / f64::from(q);
        match self {
            Model::Euclidean => 1.0 / (2.0 * ap.sin()),
            Model::Hyperbolic => ((ap.cos() / ap.sin()) * (aq.cos() / aq.sin())).acosh(),
        }
    }

    /// Point at polar coordinates (distance r from the origin, angle theta).
    fn polar(self, r: f64, theta: f64) -> Point {
        match self {
            Model::Euclidean => [r * theta.cos(), r * theta.sin(), 1.0],
            Model::Hyperbolic => [r.sinh() * theta.cos(), r.sinh() * theta.sin(), r.cosh()],
        }
    }

    /// Corners of the root face, counterclockwise, corner 0 on the
    /// positive x axis; the center is the origin.
    pub fn root_polygon(self, p: u32, q: u32) -> Vec<Point> {
        let r = self.circumradius(p, q);
        (0..p)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * f64::from(j) / f64::from(p);
                self.polar(r, theta)
            })
            .collect()
    }

    /// Reflection across the line (geodesic) through two distinct points,
    /// as an ambient matrix. Orientation-reversing.
    pub fn reflection(self, a: &Point, b: &Point) -> Isometry {
        match self {
            Model::Euclidean => {
                let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
                let len = (dx * dx + dy * dy).sqrt();
                let (nx, ny) = (-dy / len, dx / len);
                let c = nx * a[0] + ny * a[1];
                [
                    [1.0 - 2.0 * nx * nx, -2.0 * nx * ny, 2.0 * c * nx],
                    [-2.0 * nx * ny, 1.0 - 2.0 * ny * ny, 2.0 * c * ny],
                    [0.0, 0.0, 1.0],
                ]
            }
            Model::Hyperbolic => {
                // Spacelike normal of the plane through a, b and the
                // origin of the Minkowski space: J (a x b), normalized to
                // B(n, n) = 1. The reflection is x - 2 B(x, n) n.
                let cross = [
                    a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0],
                ];
                let n = [cross[0], cross[1], -cross[2]];
                let s = minkowski(&n, &n).sqrt();
                let n = [n[0] / s, n[1] / s, n[2] / s];
                let jn = [n[0], n[1], -n[2]];
                let mut m = identity();
                for (i, row) in m.iter_mut().enumerate() {
                    for (j, cell) in row.iter_mut().enumerate() {
                        *cell -= 2.0 * n[i] * jn[j];
                    }
                }
                m
            }
        }
    }

    /// Distance between two points in the model's own metric.
    pub fn distance(self, a: &Point, b: &Point) -> f64 {
        match self {
            Model::Euclidean => ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt(),
            Model::Hyperbolic => (-minkowski(a, b)).max(1.0).acosh(),
        }
    }
}

/// Point on the geodesic segment from `a` to `b` at parameter `t` in
/// [0, 1]; used to draw hyperbolic edges as polylines.
pub fn geodesic_point(model: Model, a: &Point, b: &Point, t: f64) -> Point {
    match model {
        Model::Euclidean => [
            a[0] + t * (b[0] - a[0]),
            a[1] + t * (b[1] - a[1]),
            1.0,
        ],
        Model::Hyperbolic => {
            let d = model.distance(a, b);
            if d < 1e-12 {
                return *a;
            }
            let (wa, wb) = (((1.0 - t) * d).sinh() / d.sinh(), (t * d).sinh() / d.sinh());
            model.renormalize([
                wa * a[0] + wb * b[0],
                wa * a[1] + wb * b[1],
                wa * a[2] + wb * b[2],
            ])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Point, b: &Point, tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn euclidean_reflection_across_x_axis() {
        let m = Model::Euclidean.reflection(&[0.0, 0.0, 1.0], &[1.0, 0.0, 1.0]);
        let img = apply(&m, &[0.3, 0.7, 1.0]);
        assert!(close(&img, &[0.3, -0.7, 1.0], 1e-12));
    }

    #[test]
    fn hyperbolic_reflection_across_x_axis_geodesic() {
        let a = [1.0f64.sinh(), 0.0, 1.0f64.cosh()];
        let b = [2.0f64.sinh(), 0.0, 2.0f64.cosh()];
        let m = Model::Hyperbolic.reflection(&a, &b);
        let p = [0.3f64.sinh() * 0.6, 0.3f64.sinh() * 0.8, 0.3f64.cosh()];
        let img = apply(&m, &p);
        assert!(close(&img, &[p[0], -p[1], p[2]], 1e-12));
    }

    #[test]
    fn hyperbolic_reflection_translates_origin() {
        // The geodesic {Klein x = tanh 1} passes through these two points;
        // reflecting the origin across it lands at distance 2 on the x axis.
        let a = [1.0f64.sinh(), 0.0, 1.0f64.cosh()];
        let b = [1.0f64.sinh() * 1.0f64.cosh(), 1.0f64.sinh(), 1.0f64.cosh() * 1.0f64.cosh()];
        let m = Model::Hyperbolic.reflection(&a, &b);
        let img = apply(&m, &[0.0, 0.0, 1.0]);
        assert!(close(&img, &[2.0f64.sinh(), 0.0, 2.0f64.cosh()], 1e-10));
    }

    #[test]
    fn square_root_polygon_has_unit_edges() {
        let corners = Model::Euclidean.root_polygon(4, 4);
        assert_eq!(corners.len(), 4);
        for j in 0..4 {
            let a = corners[j];
            let b = corners[(j + 1) % 4];
            let d = Model::Euclidean.distance(&a, &b);
            assert!((d - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn heptagon_neighbor_distance_is_twice_inradius() {
        // Reflecting the root center across an edge moves it by twice the
        // inradius rho, with cosh rho = cos(pi/q) / sin(pi/p).
        let model = Model::Hyperbolic;
        let corners = model.root_polygon(7, 3);
        let m = model.reflection(&corners[0], &corners[1]);
        let img = apply(&m, &[0.0, 0.0, 1.0]);
        let d = model.distance(&[0.0, 0.0, 1.0], &img);
        let cosh_rho: f64 = (std::f64::consts::PI / 3.0).cos() / (std::f64::consts::PI / 7.0).sin();
        assert!((d - 2.0 * cosh_rho.acosh()).abs() < 1e-10);
    }

    #[test]
    fn geodesic_endpoints_and_midpoint() {
        let model = Model::Hyperbolic;
        let a = model.renormalize([0.7, 0.2, 0.0]);
        let b = model.renormalize([-0.3, 1.1, 0.0]);
        assert!(close(&geodesic_point(model, &a, &b, 0.0), &a, 1e-12));
        assert!(close(&geodesic_point(model, &a, &b, 1.0), &b, 1e-12));
        let mid = geodesic_point(model, &a, &b, 0.5);
        let da = model.distance(&a, &mid);
        let db = model.distance(&mid, &b);
        assert!((da - db).abs() < 1e-10);
        assert!((minkowski(&mid, &mid) + 1.0).abs() < 1e-10);
    }
}
