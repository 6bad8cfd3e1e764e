//! Certified factorizations into products of idempotent matrices.
//!
//! Every public route returns a [`Factorization`] that has been re-verified by
//! exact multiplication. The identity is represented by the empty product and
//! identity factors are never emitted.

mod idempotent;
mod lift;
mod padded;
mod quasi;
mod transfer;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use idempotent::diagonalize_idempotent;
pub use lift::{lift_block_row, lift_column_combination, row_relation_reduce, shift_rank_r, similarity_reduce};
pub use padded::{
    base_case_display, factor_double_padded, factor_padded, factor_padded_with, factor_triangular_padded,
    gaussian_diagonalize, GaussianDiagonalization, ZeroRowEvidence, ZeroRowWitness,
};
pub use quasi::{factor_quasi_elementary, factor_quasi_permutation};
pub use transfer::{transfer_left, transfer_left_inverse, transfer_right};

use crate::error::{Error, Result};
use crate::matrix::{block_pad, Matrix};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RouteTag {
    QuasiElementary,
    QuasiPermutation,
    TransferLeft,
    TransferRight,
    LiftBlockRow,
    ColumnCombination,
    RankShift,
    RowRelation,
    TriangularPadded,
    GePadded,
    DoublePadded,
    Manual,
}

impl RouteTag {
    pub const ALL: [RouteTag; 12] = [
        RouteTag::QuasiElementary,
        RouteTag::QuasiPermutation,
        RouteTag::TransferLeft,
        RouteTag::TransferRight,
        RouteTag::LiftBlockRow,
        RouteTag::ColumnCombination,
        RouteTag::RankShift,
        RouteTag::RowRelation,
        RouteTag::TriangularPadded,
        RouteTag::GePadded,
        RouteTag::DoublePadded,
        RouteTag::Manual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RouteTag::QuasiElementary => "quasi-elementary",
            RouteTag::QuasiPermutation => "quasi-permutation",
            RouteTag::TransferLeft => "transfer-left",
            RouteTag::TransferRight => "transfer-right",
            RouteTag::LiftBlockRow => "lift-block-row",
            RouteTag::ColumnCombination => "column-combination",
            RouteTag::RankShift => "rank-shift",
            RouteTag::RowRelation => "row-relation",
            RouteTag::TriangularPadded => "triangular-padded",
            RouteTag::GePadded => "ge-padded",
            RouteTag::DoublePadded => "double-padded",
            RouteTag::Manual => "manual",
        }
    }
}

impl fmt::Display for RouteTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RouteTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RouteTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown route tag {s:?}")))
    }
}

/// Provenance of a factorization: the route tag plus route-specific
/// parameters, kept in sorted order for canonical serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Route {
    pub tag: RouteTag,
    pub params: BTreeMap<String, String>,
}

impl Route {
    pub fn new(tag: RouteTag) -> Self {
        Route {
            tag,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }
}

/// Why a factorization failed to verify. Factor indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnosis {
    TargetNotSquare,
    SizeMismatch { index: usize },
    RingMismatch { index: usize },
    NotIdempotent { index: usize },
    ProductMismatch,
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnosis::TargetNotSquare => f.write_str("target is not square"),
            Diagnosis::SizeMismatch { index } => write!(f, "factor {index} has the wrong size"),
            Diagnosis::RingMismatch { index } => write!(f, "factor {index} is over a different ring"),
            Diagnosis::NotIdempotent { index } => write!(f, "factor {index} is not idempotent"),
            Diagnosis::ProductMismatch => f.write_str("product of factors differs from target"),
        }
    }
}

/// An ordered list of idempotent factors whose product is `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    target: Matrix,
    factors: Vec<Matrix>,
    route: Route,
}

impl Factorization {
    /// Builds and verifies a factorization, dropping identity factors first.
    pub fn new(target: Matrix, factors: Vec<Matrix>, route: Route) -> Result<Self> {
        Self::raw(target, factors, route).certified()
    }

    /// A caller-supplied factor list, verified and tagged `manual`.
    pub fn manual(target: Matrix, factors: Vec<Matrix>) -> Result<Self> {
        Self::new(target, factors, Route::new(RouteTag::Manual))
    }

    /// Unverified parts as read from a certificate. Nothing is filtered, so
    /// [`Factorization::verify`] checks exactly what was supplied.
    pub fn from_parts(target: Matrix, factors: Vec<Matrix>, route: Route) -> Self {
        Factorization { target, factors, route }
    }

    pub(crate) fn raw(target: Matrix, factors: Vec<Matrix>, route: Route) -> Self {
        let factors = factors.into_iter().filter(|f| !f.is_identity()).collect();
        Factorization { target, factors, route }
    }

    pub(crate) fn certified(self) -> Result<Self> {
        self.verify().map_err(Error::Unverified)?;
        Ok(self)
    }

    pub(crate) fn with_route(mut self, route: Route) -> Self {
        self.route = route;
        self
    }

    pub fn target(&self) -> &Matrix {
        &self.target
    }

    pub fn factors(&self) -> &[Matrix] {
        &self.factors
    }

    pub fn route(&self) -> &Route {
        &self.route
    }

    pub fn ring(&self) -> &Ring {
        self.target.ring()
    }

    pub fn size(&self) -> usize {
        self.target.rows()
    }

    pub fn into_parts(self) -> (Matrix, Vec<Matrix>, Route) {
        (self.target, self.factors, self.route)
    }

    /// Exact product of the factors; `I` for the empty list.
    pub fn product(&self) -> Result<Matrix> {
        crate::matrix::product(self.ring(), self.size(), &self.factors)
    }

    /// Checks both invariants, reporting the first failure.
    pub fn verify(&self) -> core::result::Result<(), Diagnosis> {
        if !self.target.is_square() {
            return Err(Diagnosis::TargetNotSquare);
        }
        let n = self.size();
        for (index, f) in self.factors.iter().enumerate() {
            if f.ring() != self.ring() {
                return Err(Diagnosis::RingMismatch { index });
            }
            if f.rows() != n || f.cols() != n {
                return Err(Diagnosis::SizeMismatch { index });
            }
            if (f * f) != *f {
                return Err(Diagnosis::NotIdempotent { index });
            }
        }
        match self.product() {
            Ok(p) if p == self.target => Ok(()),
            _ => Err(Diagnosis::ProductMismatch),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    /// `[F_mᵀ, ..., F_1ᵀ]` for the transposed target.
    pub fn transpose(&self) -> Self {
        Factorization {
            target: self.target.transpose(),
            factors: self.factors.iter().rev().map(Matrix::transpose).collect(),
            route: self.route.clone(),
        }
    }

    /// `{P F_k P⁻¹}` for the target `P A P⁻¹`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.conjugate(p, p_inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(Factorization::raw(self.target.conjugate(p, p_inv)?, factors, self.route.clone()))
    }

    /// `{F_k ⊕ 0_s}` for `block_pad(target, s)`.
    pub fn pad(&self, s: usize) -> Result<Self> {
        if s == 0 {
            return Ok(self.clone());
        }
        let factors = if self.factors.is_empty() {
            alloc::vec![block_pad(&Matrix::identity(self.ring(), self.size()), s)?]
        } else {
            self.factors.iter().map(|f| block_pad(f, s)).collect::<Result<Vec<_>>>()?
        };
        Ok(Factorization::raw(block_pad(&self.target, s)?, factors, self.route.clone()))
    }

    /// `{F_k ⊕ I_r}` for `target ⊕ I_r`.
    pub fn extend_identity(&self, r: usize) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.extend_identity(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Factorization::raw(self.target.extend_identity(r)?, factors, self.route.clone()))
    }
}

/// True iff every factor is idempotent and their product equals the target.
pub fn verify_factorization(f: &Factorization) -> bool {
    f.is_valid()
}
