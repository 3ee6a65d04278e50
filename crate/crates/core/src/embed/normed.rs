use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use super::{EuclideanPoint, Norm};
use crate::distortion::{BoundedMap, Constant, Measure};
use crate::error::{Error, Result};
use crate::graph::{build_clover, build_cycle, build_path, Clover, PointedGraph};

/// `St_{n,k} → (R^n, ‖·‖_p)`, `x ↦ d(v0,x)·e_i` for `x` in branch `i`;
/// claimed bounds `(1/2, 1)`.
#[derive(Debug, Clone)]
pub struct StarToNormed {
    pub n: usize,
    pub k: usize,
    pub norm: Norm,
    pub star: Clover,
}

impl StarToNormed {
    pub fn new(n: usize, k: usize, norm: Norm) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("star needs at least one branch"));
        }
        let star = build_clover(&PointedGraph::new(build_path(k)?, 0)?, n)?;
        Ok(StarToNormed { n, k, norm, star })
    }

    pub fn point(&self, x: usize) -> Result<EuclideanPoint> {
        self.star.graph.graph.check_vertex(x)?;
        let mut out = EuclideanPoint::zero(self.n);
        if let (Some(branch), depth) = self.star.locate(x) {
            // Path vertex v_j has index j, which is its distance from v0.
            out.0[branch] = depth as f64;
        }
        Ok(out)
    }
}

/// The star map applied to one vertex of `St_{n,k}`.
pub fn embed_star_to_normed(n: usize, k: usize, x: usize, norm: Norm) -> Result<EuclideanPoint> {
    StarToNormed::new(n, k, norm)?.point(x)
}

impl BoundedMap for StarToNormed {
    type Point = usize;
    type Image = EuclideanPoint;

    fn name(&self) -> String {
        format!("star-to-normed(n={}, k={}, p={})", self.n, self.k, self.norm)
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::ratio(1, 2), Constant::int(1))
    }

    fn apply(&self, x: &usize) -> Result<EuclideanPoint> {
        self.point(*x)
    }

    fn source_distance(&self, x: &usize, y: &usize) -> Result<Measure> {
        Ok(Measure::Int(self.star.graph.graph.dist(*x, *y)? as u64))
    }

    fn target_distance(&self, u: &EuclideanPoint, v: &EuclideanPoint) -> Result<Measure> {
        Ok(Measure::Real(u.distance(v, self.norm)))
    }

    fn label(&self, x: &usize) -> String {
        self.star.graph.graph.label(*x).to_string()
    }
}

/// Vertex `j` of the regular `k`-gon of radius `k/4`, translated so that
/// vertex 0 sits at the origin.
pub fn regular_polygon_vertex(k: usize, j: usize) -> [f64; 2] {
    let radius = k as f64 / 4.0;
    let angle = 2.0 * PI * j as f64 / k as f64;
    [radius * (angle.cos() - 1.0), radius * angle.sin()]
}

/// `Ro_{n,k} → ℓ_2^{2n}`, petal `i` mapped onto the regular `k`-gon in the
/// coordinates `2i, 2i+1`; claimed bounds `(1/√2, π/2)`.
#[derive(Debug, Clone)]
pub struct RoseToEuclidean {
    pub n: usize,
    pub k: usize,
    pub rose: Clover,
}

impl RoseToEuclidean {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("rose needs at least one petal"));
        }
        let rose = build_clover(&PointedGraph::new(build_cycle(k)?, 0)?, n)?;
        Ok(RoseToEuclidean { n, k, rose })
    }

    pub fn point(&self, x: usize) -> Result<EuclideanPoint> {
        self.rose.graph.graph.check_vertex(x)?;
        let mut out = EuclideanPoint::zero(2 * self.n);
        if let (Some(petal), j) = self.rose.locate(x) {
            let [a, b] = regular_polygon_vertex(self.k, j);
            out.0[2 * petal] = a;
            out.0[2 * petal + 1] = b;
        }
        Ok(out)
    }
}

/// The rose map applied to one vertex of `Ro_{n,k}`.
pub fn embed_rose_to_euclidean(n: usize, k: usize, x: usize) -> Result<EuclideanPoint> {
    RoseToEuclidean::new(n, k)?.point(x)
}

impl BoundedMap for RoseToEuclidean {
    type Point = usize;
    type Image = EuclideanPoint;

    fn name(&self) -> String {
        format!("rose-to-euclidean(n={}, k={})", self.n, self.k)
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::Real(FRAC_1_SQRT_2), Constant::Real(FRAC_PI_2))
    }

    fn apply(&self, x: &usize) -> Result<EuclideanPoint> {
        self.point(*x)
    }

    fn source_distance(&self, x: &usize, y: &usize) -> Result<Measure> {
        Ok(Measure::Int(self.rose.graph.graph.dist(*x, *y)? as u64))
    }

    fn target_distance(&self, u: &EuclideanPoint, v: &EuclideanPoint) -> Result<Measure> {
        Ok(Measure::Real(u.distance(v, Norm::L2)))
    }

    fn label(&self, x: &usize) -> String {
        self.rose.graph.graph.label(*x).to_string()
    }
}
