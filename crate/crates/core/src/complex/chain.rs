use alloc::vec::Vec;
use core::ops::{Add, AddAssign};

use super::{Simplex, SimplicialComplex, VertexId};
use crate::{Error, Result};

/// A GF(2) chain: the set of simplices with coefficient one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    dim: usize,
    simplices: Vec<Simplex>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain { dim, simplices: Vec::new() }
    }

    /// Builds a chain from simplices of dimension `dim`. Repeated simplices
    /// cancel in pairs.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(dim: usize, simplices: I) -> Result<Self> {
        let mut v: Vec<Simplex> = simplices.into_iter().collect();
        if let Some(s) = v.iter().find(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: s.dim() });
        }
        v.sort_unstable();
        let mut out: Vec<Simplex> = Vec::with_capacity(v.len());
        for s in v {
            if out.last() == Some(&s) {
                out.pop();
            } else {
                out.push(s);
            }
        }
        Ok(Chain { dim, simplices: out })
    }

    /// The closed polygon `v1 - v2 - ... - vk - v1` as a 1-chain.
    pub fn polygon(vertices: &[VertexId]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidSimplex);
        }
        let mut edges = Vec::with_capacity(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            let b = vertices[(i + 1) % vertices.len()];
            edges.push(Simplex::new(&[a, b])?);
        }
        Chain::from_simplices(1, edges)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.simplices.is_empty()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.simplices.iter()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.binary_search(s).is_ok()
    }

    /// Toggles one simplex.
    pub fn toggle(&mut self, s: Simplex) {
        debug_assert_eq!(s.dim(), self.dim);
        match self.simplices.binary_search(&s) {
            Ok(i) => {
                self.simplices.remove(i);
            }
            Err(i) => self.simplices.insert(i, s),
        }
    }

    pub fn is_supported_in(&self, k: &SimplicialComplex) -> bool {
        self.simplices.iter().all(|s| k.contains(s))
    }

    /// Boundary without a membership check.
    pub fn boundary(&self) -> Chain {
        if self.dim == 0 {
            return Chain::zero(0);
        }
        let faces = self.simplices.iter().flat_map(|s| s.faces());
        Chain::from_simplices(self.dim - 1, faces).expect("faces have dimension dim - 1")
    }

    pub fn is_cycle(&self) -> bool {
        self.dim == 0 || self.boundary().is_zero()
    }

    /// Vertices touched by the chain, ascending.
    pub fn support_vertices(&self) -> Vec<VertexId> {
        let mut v: Vec<VertexId> = self.simplices.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl AddAssign<&Chain> for Chain {
    fn add_assign(&mut self, rhs: &Chain) {
        assert_eq!(self.dim, rhs.dim, "chains of different dimension");
        let (a, b) = (&self.simplices, &rhs.simplices);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        self.simplices = out;
    }
}

impl Add<&Chain> for &Chain {
    type Output = Chain;

    fn add(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// Boundary of `c`, checking that every simplex of `c` belongs to `k`.
pub fn boundary(c: &Chain, k: &SimplicialComplex) -> Result<Chain> {
    if let Some(s) = c.iter().find(|s| !k.contains(s)) {
        return Err(Error::NotInComplex(*s));
    }
    Ok(c.boundary())
}
