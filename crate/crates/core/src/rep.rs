//! Finite-dimensional representations of a quiver over `F_p`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfq::{Matrix, Prime, Subspace};
use crate::quiver::{DimVector, Quiver};

/// A vector space `F_p^{d_v}` at every vertex and a matrix for every edge.
///
/// The map on edge `u -> v` is a `d_v x d_u` matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    p: Prime,
    dims: DimVector,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, p: Prime, dims: DimVector, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector {dims} for a quiver with {} vertices",
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.edges().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} edge maps for {} edges",
                maps.len(),
                quiver.edges().len()
            )));
        }
        for (m, &(s, t)) in maps.iter().zip(quiver.edges()) {
            if m.prime() != p || m.rows() != dims.0[t] || m.cols() != dims.0[s] {
                return Err(Error::DimensionMismatch(format!(
                    "edge {s}->{t} needs a {}x{} matrix over F_{p}, got {m:?}",
                    dims.0[t], dims.0[s]
                )));
            }
        }
        Ok(Representation {
            quiver,
            p,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, p: Prime) -> Self {
        let dims = DimVector::zero(quiver.vertex_count());
        Self::with_zero_maps(quiver, p, dims)
    }

    /// The representation with the given dimensions and every edge map zero (the semisimple
    /// representation of that dimension vector).
    pub fn with_zero_maps(quiver: Arc<Quiver>, p: Prime, dims: DimVector) -> Self {
        let maps = quiver
            .edges()
            .iter()
            .map(|&(s, t)| Matrix::zeros(p, dims.0[t], dims.0[s]))
            .collect();
        Representation {
            quiver,
            p,
            dims,
            maps,
        }
    }

    /// The simple representation concentrated at vertex `v`.
    pub fn simple(quiver: Arc<Quiver>, p: Prime, v: usize) -> Self {
        let dims = DimVector::unit(quiver.vertex_count(), v);
        Self::with_zero_maps(quiver, p, dims)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_zero()
    }

    fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.p != other.p || *self.quiver != *other.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }

    /// Matrix of the linear map
    /// `(phi_v)_v -> (other(e) phi_u - phi_v self(e))_{e: u -> v}`
    /// from `⊕_v Hom(self_v, other_v)` to `⊕_e Hom(self_u, other_v)`.
    ///
    /// Unknowns are laid out vertex by vertex, each `phi_v` row-major; equations edge by edge,
    /// each block row-major. Its kernel is `Hom(self, other)` and its cokernel `Ext¹(self, other)`.
    fn intertwiner_system(&self, other: &Representation) -> Matrix {
        let p = self.p;
        let (m, n) = (&self.dims.0, &other.dims.0);
        let mut offsets = Vec::with_capacity(m.len());
        let mut unknowns = 0;
        for v in 0..m.len() {
            offsets.push(unknowns);
            unknowns += n[v] * m[v];
        }
        let equations: usize = self.quiver.edges().iter().map(|&(u, v)| n[v] * m[u]).sum();
        let mut sys = Matrix::zeros(p, equations, unknowns);
        let mut row0 = 0;
        for (e, &(u, v)) in self.quiver.edges().iter().enumerate() {
            let (me, ne) = (&self.maps[e], &other.maps[e]);
            for i in 0..n[v] {
                for j in 0..m[u] {
                    let row = row0 + i * m[u] + j;
                    // + sum_k N(e)[i][k] * phi_u[k][j]
                    for k in 0..n[u] {
                        let col = offsets[u] + k * m[u] + j;
                        let cur = sys.get(row, col);
                        sys.set(row, col, p.add(cur, ne.get(i, k)));
                    }
                    // - sum_l phi_v[i][l] * M(e)[l][j]
                    for l in 0..m[v] {
                        let col = offsets[v] + i * m[v] + l;
                        let cur = sys.get(row, col);
                        sys.set(row, col, p.sub(cur, me.get(l, j)));
                    }
                }
            }
            row0 += n[v] * m[u];
        }
        sys
    }

    /// `dim Hom(self, other)`.
    pub fn hom_dim(&self, other: &Representation) -> Result<usize> {
        self.check_compatible(other)?;
        let sys = self.intertwiner_system(other);
        Ok(sys.cols() - sys.rank())
    }

    /// `dim Ext¹(self, other)`, as the cokernel of the intertwiner map (valid because path
    /// algebras of quivers are hereditary).
    pub fn ext1_dim(&self, other: &Representation) -> Result<usize> {
        self.check_compatible(other)?;
        let sys = self.intertwiner_system(other);
        Ok(sys.rows() - sys.rank())
    }

    /// A basis of `Hom(self, other)`.
    pub fn hom_basis(&self, other: &Representation) -> Result<Vec<Morphism>> {
        self.check_compatible(other)?;
        let sys = self.intertwiner_system(other);
        let (m, n) = (&self.dims.0, &other.dims.0);
        Ok(sys
            .nullspace()
            .into_iter()
            .map(|x| {
                let x = x.column(0);
                let mut at = 0;
                let vertex_maps = (0..m.len())
                    .map(|v| {
                        let len = n[v] * m[v];
                        let block = Matrix::from_raw(self.p, n[v], m[v], x[at..at + len].to_vec());
                        at += len;
                        block
                    })
                    .collect();
                Morphism {
                    source: self.clone(),
                    target: other.clone(),
                    vertex_maps,
                }
            })
            .collect())
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_compatible(other)?;
        let dims = &self.dims + &other.dims;
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            p: self.p,
            dims,
            maps,
        })
    }

    /// Restriction to the given per-vertex subspaces and the induced quotient.
    ///
    /// Each entry of `bases` is a matrix whose rows form a basis of the subspace at that
    /// vertex. Returns `Ok(None)` when the subspaces are not closed under the edge maps.
    pub fn sub_and_quotient(
        &self,
        bases: &[Matrix],
    ) -> Result<Option<(Representation, Representation)>> {
        if bases.len() != self.dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} subspace bases for {} vertices",
                bases.len(),
                self.dims.len()
            )));
        }
        let mut subs = Vec::with_capacity(bases.len());
        for (v, b) in bases.iter().enumerate() {
            if b.prime() != self.p || b.cols() != self.dims.0[v] {
                return Err(Error::DimensionMismatch(format!(
                    "basis at vertex {v} lives in dimension {}, expected {}",
                    b.cols(),
                    self.dims.0[v]
                )));
            }
            let s = Subspace::span(b);
            if s.dim() != b.rows() {
                return Err(Error::DimensionMismatch(format!(
                    "basis at vertex {v} is linearly dependent"
                )));
            }
            subs.push(s);
        }
        Ok(self.sub_and_quotient_of(&subs))
    }

    /// As [`Representation::sub_and_quotient`], for subspaces already in echelon form.
    ///
    /// The subrepresentation is written in the echelon basis of each subspace and the quotient
    /// in the basis of non-pivot standard vectors.
    pub fn sub_and_quotient_of(
        &self,
        subs: &[Subspace],
    ) -> Option<(Representation, Representation)> {
        debug_assert_eq!(subs.len(), self.dims.len());
        let p = self.p;
        let mut sub_maps = Vec::with_capacity(self.maps.len());
        for (e, &(u, v)) in self.quiver.edges().iter().enumerate() {
            let (su, sv) = (&subs[u], &subs[v]);
            let mut m = Matrix::zeros(p, sv.dim(), su.dim());
            for j in 0..su.dim() {
                let image = self.maps[e].apply(su.basis().row(j));
                let coords = sv.coordinates(&image)?;
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            sub_maps.push(m);
        }
        let mut quot_maps = Vec::with_capacity(self.maps.len());
        for (e, &(u, v)) in self.quiver.edges().iter().enumerate() {
            let (su, sv) = (&subs[u], &subs[v]);
            let cols = su.complement_indices();
            let mut m = Matrix::zeros(p, sv.ambient_dim() - sv.dim(), cols.len());
            for (j, &c) in cols.iter().enumerate() {
                let image = self.maps[e].column(c);
                for (i, x) in sv.quotient_coordinates(&image).into_iter().enumerate() {
                    m.set(i, j, x);
                }
            }
            quot_maps.push(m);
        }
        let sub_dims = DimVector(subs.iter().map(Subspace::dim).collect());
        let quot_dims = DimVector(subs.iter().map(|s| s.ambient_dim() - s.dim()).collect());
        Some((
            Representation {
                quiver: self.quiver.clone(),
                p,
                dims: sub_dims,
                maps: sub_maps,
            },
            Representation {
                quiver: self.quiver.clone(),
                p,
                dims: quot_dims,
                maps: quot_maps,
            },
        ))
    }

    /// Base change `M(e) -> g_v M(e) g_u^{-1}` by invertible matrices `g` per vertex.
    pub fn conjugate(&self, g: &[Matrix]) -> Result<Representation> {
        if g.len() != self.dims.len() {
            return Err(Error::DimensionMismatch(
                "one matrix per vertex required".into(),
            ));
        }
        let inverses = g
            .iter()
            .map(|m| {
                m.inverse()
                    .ok_or_else(|| Error::DimensionMismatch("base change is not invertible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .quiver
            .edges()
            .iter()
            .zip(&self.maps)
            .map(|(&(u, v), m)| g[v].mul(m).mul(&inverses[u]))
            .collect();
        Representation::new(self.quiver.clone(), self.p, self.dims.clone(), maps)
    }
}

/// A morphism of representations: one matrix per vertex making every edge square commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    vertex_maps: Vec<Matrix>,
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        vertex_maps: Vec<Matrix>,
    ) -> Result<Self> {
        source.check_compatible(&target)?;
        if vertex_maps.len() != source.dims.len() {
            return Err(Error::DimensionMismatch(
                "one matrix per vertex required".into(),
            ));
        }
        for (v, f) in vertex_maps.iter().enumerate() {
            if f.rows() != target.dims.0[v] || f.cols() != source.dims.0[v] {
                return Err(Error::DimensionMismatch(format!(
                    "vertex map {v} has wrong shape"
                )));
            }
        }
        for (e, &(u, v)) in source.quiver.edges().iter().enumerate() {
            if target.maps[e].mul(&vertex_maps[u]) != vertex_maps[v].mul(&source.maps[e]) {
                return Err(Error::DimensionMismatch(format!(
                    "square for edge {u}->{v} does not commute"
                )));
            }
        }
        Ok(Morphism {
            source,
            target,
            vertex_maps,
        })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn vertex_maps(&self) -> &[Matrix] {
        &self.vertex_maps
    }
}
