//! Seeded random polynomial generator over a polygon: i.i.d. uniform zeros
//! by rejection sampling in the bounding box, plus the structured families
//! the extremal configurations tend to live near (all zeros at a vertex, at
//! the centroid, at Fekete points, or clustered along the boundary).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::capacity::{fekete_diameter, CompactSet};
use crate::geom::Polygon;
use crate::poly::PolyByZeros;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    UniformInterior,
    AllAtVertex,
    AllAtCentroid,
    FeketePoints,
    BoundaryClustered,
}

pub struct RandomPolyGen {
    rng: ChaCha8Rng,
}

impl RandomPolyGen {
    pub fn new(seed: u64) -> Self {
        RandomPolyGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// One uniform point of K by rejection in the bounding box.
    pub fn point_in(&mut self, k: &Polygon) -> Complex64 {
        let (mut xlo, mut xhi, mut ylo, mut yhi) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for v in k.vertices() {
            xlo = xlo.min(v.re);
            xhi = xhi.max(v.re);
            ylo = ylo.min(v.im);
            yhi = yhi.max(v.im);
        }
        loop {
            let z = Complex64::new(self.rng.gen_range(xlo..=xhi), self.rng.gen_range(ylo..=yhi));
            if k.contains(z) {
                return z;
            }
        }
    }

    pub fn uniform(&mut self, k: &Polygon, n: usize) -> PolyByZeros {
        PolyByZeros::monic((0..n).map(|_| self.point_in(k)).collect())
    }

    pub fn family(&mut self, k: &Polygon, n: usize, fam: Family) -> PolyByZeros {
        match fam {
            Family::UniformInterior => self.uniform(k, n),
            Family::AllAtVertex => {
                let v = k.vertex(self.rng.gen_range(0..k.vertex_count()));
                PolyByZeros::monic(vec![v; n])
            }
            Family::AllAtCentroid => PolyByZeros::monic(vec![k.centroid(); n]),
            Family::FeketePoints => {
                if n < 2 {
                    return PolyByZeros::monic(vec![k.vertex(0); n]);
                }
                let fr = fekete_diameter(&CompactSet::Polygon(k.clone()), n);
                PolyByZeros::monic(fr.points)
            }
            Family::BoundaryClustered => {
                // zeros near ∂K, pulled slightly inside
                let c = k.centroid();
                let zeros = (0..n)
                    .map(|_| {
                        let edge = self.rng.gen_range(0..k.vertex_count());
                        let t = self.rng.gen_range(0.0..1.0);
                        let z = k.boundary_point(edge, t);
                        let pull: f64 = self.rng.gen_range(0.0..0.05);
                        z + (c - z) * pull
                    })
                    .collect();
                PolyByZeros::monic(zeros)
            }
        }
    }

    /// Deterministic mixed stream: case i cycles through the families.
    pub fn mixed(&mut self, k: &Polygon, n: usize, case: usize) -> PolyByZeros {
        let fam = match case % 5 {
            0 => Family::UniformInterior,
            1 => Family::BoundaryClustered,
            2 => Family::AllAtCentroid,
            3 => Family::AllAtVertex,
            _ => Family::UniformInterior,
        };
        self.family(k, n, fam)
    }

    /// Uniform zeros in the closed unit disk.
    pub fn uniform_in_disk(&mut self, n: usize) -> PolyByZeros {
        let mut zeros = Vec::with_capacity(n);
        while zeros.len() < n {
            let z = Complex64::new(self.rng.gen_range(-1.0..=1.0), self.rng.gen_range(-1.0..=1.0));
            if z.norm() <= 1.0 {
                zeros.push(z);
            }
        }
        PolyByZeros::monic(zeros)
    }

    /// Uniform zeros anywhere in a square box of half-side `r` around the
    /// centroid (deliberately allowed to leave K, for the bounds that hold
    /// without the zeros-in-K hypothesis).
    pub fn uniform_in_box(&mut self, k: &Polygon, n: usize, r: f64) -> PolyByZeros {
        let c = k.centroid();
        PolyByZeros::monic(
            (0..n)
                .map(|_| {
                    c + Complex64::new(self.rng.gen_range(-r..=r), self.rng.gen_range(-r..=r))
                })
                .collect(),
        )
    }

    pub fn gen_range(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn gen_usize(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::shapes;

    #[test]
    fn deterministic_per_seed() {
        let k = shapes::equilateral_triangle();
        let a = RandomPolyGen::new(7).uniform(&k, 12);
        let b = RandomPolyGen::new(7).uniform(&k, 12);
        assert_eq!(a, b);
        let c = RandomPolyGen::new(8).uniform(&k, 12);
        assert_ne!(a, c);
    }

    #[test]
    fn zeros_stay_in_polygon() {
        let k = shapes::right_triangle();
        let mut g = RandomPolyGen::new(3);
        for case in 0..10 {
            let p = g.mixed(&k, 9, case);
            assert!(p.zeros_in(&k, 1e-12));
        }
    }
}
