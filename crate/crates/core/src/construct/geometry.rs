//! Point-hyperplane incidence matrices of the Euclidean geometry EG(m, 2^s)
//! with the origin and every hyperplane through it removed.

use super::field::{FieldElement, GaloisField};
use super::ConstructError;
use crate::gf2::BinaryMatrix;

/// Largest supported number of geometry points, `q^m`.
pub const MAX_POINTS: usize = 1 << 16;

/// Column order of the incidence matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PointOrder {
    /// Column `i` is the point `α^i` of GF(q^m), viewed as a vector over GF(q)
    /// in the basis `1, α, …, α^{m-1}`. The resulting code is cyclic.
    #[default]
    Cyclic,
    /// Column `i` is the point whose base-q digits encode `i + 1`.
    Lexicographic,
}

/// The punctured geometry: every point except the origin, every hyperplane
/// `{x : a·x = b}` with `b ≠ 0`.
#[derive(Debug, Clone)]
pub struct GeometrySpec {
    pub m: usize,
    pub s: u32,
    pub q: usize,
    /// Coordinates over GF(q), one entry per column.
    pub points: Vec<Vec<FieldElement>>,
    /// `(a, b)` with the first non-zero entry of `a` equal to one.
    pub hyperplanes: Vec<(Vec<FieldElement>, FieldElement)>,
}

fn digits(mut value: usize, q: usize, m: usize) -> Vec<FieldElement> {
    (0..m)
        .map(|_| {
            let d = value % q;
            value /= q;
            FieldElement(d as u32)
        })
        .collect()
}

fn encode(coords: &[FieldElement], q: usize) -> usize {
    coords.iter().rev().fold(0, |acc, c| acc * q + c.0 as usize)
}

/// Coordinates of each non-zero element of GF(q^m) over the subfield GF(q).
fn cyclic_points(m: usize, s: u32) -> Result<Vec<Vec<FieldElement>>, ConstructError> {
    let small = GaloisField::new(s)?;
    let big = GaloisField::new(s * m as u32)?;
    let q = small.size();
    // image of the subfield generator: a root of its primitive polynomial
    let gamma = big
        .elements()
        .find(|&y| !y.is_zero() && big.eval_binary_poly(small.modulus(), y).is_zero())
        .ok_or(ConstructError::UnsupportedField { s })?;
    let embed = |c: FieldElement| match small.log_alpha(c) {
        None => FieldElement::ZERO,
        Some(l) => big.pow(gamma, l),
    };
    let mut coords_of = vec![Vec::new(); big.size()];
    for code in 0..q.pow(m as u32) {
        let c = digits(code, q, m);
        let y = c
            .iter()
            .enumerate()
            .fold(FieldElement::ZERO, |acc, (i, &ci)| big.add(acc, big.mul(embed(ci), big.alpha_pow(i))));
        coords_of[y.0 as usize] = c;
    }
    Ok((0..big.order()).map(|i| coords_of[big.alpha_pow(i).0 as usize].clone()).collect())
}

impl GeometrySpec {
    pub fn new(m: usize, s: u32, order: PointOrder) -> Result<Self, ConstructError> {
        if m < 2 || s < 1 {
            return Err(ConstructError::InvalidGeometry { m, s });
        }
        let q = 1usize << s;
        let total = q
            .checked_pow(m as u32)
            .filter(|&t| t <= MAX_POINTS)
            .ok_or(ConstructError::DimensionTooLarge { m, s })?;
        let points = match order {
            PointOrder::Cyclic => cyclic_points(m, s)?,
            PointOrder::Lexicographic => (1..total).map(|v| digits(v, q, m)).collect(),
        };
        let mut hyperplanes = Vec::with_capacity(total - 1);
        for code in 1..total {
            let a = digits(code, q, m);
            if a.iter().find(|c| !c.is_zero()) != Some(&FieldElement::ONE) {
                continue;
            }
            for b in 1..q as u32 {
                hyperplanes.push((a.clone(), FieldElement(b)));
            }
        }
        Ok(Self {
            m,
            s,
            q,
            points,
            hyperplanes,
        })
    }

    pub fn incidence_matrix(&self) -> Result<BinaryMatrix, ConstructError> {
        let f = GaloisField::new(self.s)?;
        let n = self.points.len();
        let mut h = BinaryMatrix::zeros(self.hyperplanes.len(), n)?;
        for (r, (a, b)) in self.hyperplanes.iter().enumerate() {
            for (c, p) in self.points.iter().enumerate() {
                let dot = a
                    .iter()
                    .zip(p)
                    .fold(FieldElement::ZERO, |acc, (&ai, &pi)| f.add(acc, f.mul(ai, pi)));
                if dot == *b {
                    h.set(r, c, true);
                }
            }
        }
        Ok(h)
    }

    pub fn point_index(&self, coords: &[FieldElement]) -> Option<usize> {
        self.points.iter().position(|p| encode(p, self.q) == encode(coords, self.q))
    }
}

/// `(q^m - 1) × (q^m - 1)` incidence matrix, rows indexed by hyperplanes.
pub fn eg_point_hyperplane_h(m: usize, s: u32) -> Result<BinaryMatrix, ConstructError> {
    GeometrySpec::new(m, s, PointOrder::Cyclic)?.incidence_matrix()
}
