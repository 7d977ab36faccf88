//! Ext-groups between finite-dimensional `H`-modules from the Koszul-type
//! resolution `H ⊗_W (X ⊗ ∧^i V)`. Applying `Hom_H(-, Y)` leaves the
//! complex `Hom_W(X ⊗ ∧^i V, Y)`, which is solved degree by degree.
//!
//! A cochain `Ψ` in degree `i` is a `dim Y × (C(n,i)·dim X)` matrix whose
//! column `S·dim X + x` is the image of `x ⊗ a_S`, with `S` running over the
//! `i`-subsets of simple roots in lexicographic order.

mod checks;

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::charpair::{elliptic_pairing, trace_class_function, twisted_elliptic_pairing};
use crate::error::{Error, Result};
use crate::hecke::HModule;
use crate::linalg::{subsets, Matrix};
use crate::rational::{format_q, q, to_i64, Q};
use crate::sparse::{solve_intertwiners, unflatten, NullBasis};

pub use checks::{deformation_check, rigid_verification, CheckLine, DeformationReport, RigidMode, RigidReport};

/// Largest number of unknowns `dim Y · C(n,i) · dim X` solved in one degree.
pub const SOLVER_CAP: usize = 100_000;

/// `Hom_W(X ⊗ ∧^i V, Y)` as a null space of the flattened cochains.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub basis: NullBasis,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, k: usize) -> Matrix {
        unflatten(&self.basis.dense(k), self.rows, self.cols)
    }

    /// Coordinates of `psi`, or `None` when it is not in the space.
    pub fn coordinates(&self, psi: &Matrix) -> Option<Vec<Q>> {
        self.basis.contains(psi.data()).then(|| self.basis.coordinates(psi.data()))
    }
}

fn check_pair(x: &HModule, y: &HModule) -> Result<()> {
    if x.datum() != y.datum() {
        return Err(Error::GroupMismatch(x.datum().name(), y.datum().name()));
    }
    if !x.is_full() || !y.is_full() {
        return Err(Error::Unsupported("Ext is computed between H-modules, not H_J-modules".into()));
    }
    Ok(())
}

pub fn hom_w_basis(x: &HModule, y: &HModule, i: usize, cap: usize) -> Result<HomSpace> {
    check_pair(x, y)?;
    let n = x.rank();
    let wedge = subsets(n, i).len();
    let (rows, cols) = (y.dim(), wedge * x.dim());
    if rows * cols > cap {
        return Err(Error::SolverCap(format!("degree {i} needs {} unknowns, cap is {cap}", rows * cols)));
    }
    let table = x.table();
    let mut pairs = Vec::with_capacity(n);
    for s in 0..n {
        let ws = table.datum().simple_reflection(s).compound(i);
        pairs.push((y.t(s).clone(), ws.kron(x.t(s))));
    }
    let refs: Vec<(&Matrix, &Matrix)> = pairs.iter().map(|(l, r)| (l, r)).collect();
    Ok(HomSpace { degree: i, rows, cols, basis: solve_intertwiners(&refs, rows, cols) })
}

/// `(d*Ψ)_T = Σ_{p} (-1)^p [Y(a_{j_p}) Ψ_{T∖j_p} - Ψ_{T∖j_p} X(a_{j_p})]`
/// over `T = {j_0 < ... < j_i}`; `ax`/`ay` give the actions of the simple
/// roots (plain or tilde).
fn d_star_apply(psi: &Matrix, i: usize, n: usize, dx: usize, ax: &[Matrix], ay: &[Matrix]) -> Matrix {
    let src = subsets(n, i);
    let dst = subsets(n, i + 1);
    let mut out = Matrix::zeros(psi.rows(), dst.len() * dx);
    for (ti, t) in dst.iter().enumerate() {
        let mut acc = Matrix::zeros(psi.rows(), dx);
        for (p, &j) in t.iter().enumerate() {
            let rest: Vec<usize> = t.iter().copied().filter(|&l| l != j).collect();
            let si = src.iter().position(|s| *s == rest).expect("subset");
            let block = psi.columns(si * dx, dx);
            let term = &(&ay[j] * &block) - &(&block * &ax[j]);
            acc = if p % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        out.set_block(0, ti * dx, &acc);
    }
    out
}

/// The complex `Hom_W(X ⊗ ∧^• V, Y)` with its differentials in the null
/// space coordinates.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    pub x: HModule,
    pub y: HModule,
    pub homs: Vec<HomSpace>,
    /// `d[i]: Hom_i -> Hom_{i+1}`, a `dim Hom_{i+1} × dim Hom_i` matrix
    pub d: Vec<Matrix>,
}

impl KoszulComplex {
    pub fn build(x: &HModule, y: &HModule, cap: usize) -> Result<Self> {
        check_pair(x, y)?;
        let n = x.rank();
        let homs = (0..=n).map(|i| hom_w_basis(x, y, i, cap)).collect::<Result<Vec<_>>>()?;
        let mut cx = KoszulComplex { x: x.clone(), y: y.clone(), homs, d: Vec::new() };
        let (ax, ay) = (x.v_gens().to_vec(), y.v_gens().to_vec());
        cx.d = (0..n).map(|i| cx.differential(i, &ax, &ay)).collect::<Result<_>>()?;
        Ok(cx)
    }

    pub fn rank(&self) -> usize {
        self.x.rank()
    }

    fn differential(&self, i: usize, ax: &[Matrix], ay: &[Matrix]) -> Result<Matrix> {
        let (src, dst) = (&self.homs[i], &self.homs[i + 1]);
        let mut cols = Vec::with_capacity(src.dim());
        for k in 0..src.dim() {
            let img = d_star_apply(&src.element(k), i, self.rank(), self.x.dim(), ax, ay);
            let c = dst.coordinates(&img).ok_or_else(|| {
                Error::Consistency(format!("d* of a degree-{i} cochain is not W-equivariant"))
            })?;
            cols.push(c);
        }
        Ok(Matrix::from_cols(dst.dim(), &cols))
    }

    /// Differentials rebuilt from the tilde elements `ã_j` instead of `a_j`.
    pub fn tilde_differentials(&self) -> Result<Vec<Matrix>> {
        let n = self.rank();
        let basis = |m: &HModule| -> Result<Vec<Matrix>> {
            (0..n)
                .map(|j| {
                    let mut v = vec![Q::zero(); n];
                    v[j] = Q::one();
                    m.tilde_matrix(&v)
                })
                .collect()
        };
        let (ax, ay) = (basis(&self.x)?, basis(&self.y)?);
        (0..n).map(|i| self.differential(i, &ax, &ay)).collect()
    }

    pub fn d_squared_zero(&self) -> bool {
        self.d.windows(2).all(|w| (&w[1] * &w[0]).is_zero())
    }

    /// `θ*` on each cochain space: `Ψ -> Θ_Y Ψ (∧^i θ_V ⊗ Θ_X)`.
    pub fn theta_star(&self, theta_x: &Matrix, theta_y: &Matrix) -> Result<Vec<Matrix>> {
        let th = &self.x.table().theta().matrix;
        let mut out = Vec::with_capacity(self.homs.len());
        for (i, h) in self.homs.iter().enumerate() {
            let right = th.compound(i).kron(theta_x);
            let mut cols = Vec::with_capacity(h.dim());
            for k in 0..h.dim() {
                let img = &(theta_y * &h.element(k)) * &right;
                cols.push(h.coordinates(&img).ok_or_else(|| {
                    Error::Consistency(format!("theta* leaves Hom_W in degree {i}"))
                })?);
            }
            out.push(Matrix::from_cols(h.dim(), &cols));
        }
        Ok(out)
    }

    /// `θ* d* = d* θ*` in every degree.
    pub fn theta_commutes(&self, theta_star: &[Matrix]) -> bool {
        self.d.iter().enumerate().all(|(i, d)| &theta_star[i + 1] * d == d * &theta_star[i])
    }

    fn kernel(&self, i: usize) -> Matrix {
        match self.d.get(i) {
            Some(d) if d.rows() > 0 => d.kernel(),
            _ => Matrix::identity(self.homs[i].dim()),
        }
    }

    fn image(&self, i: usize) -> Matrix {
        match i.checked_sub(1).and_then(|p| self.d.get(p)) {
            Some(d) if d.rows() > 0 && d.cols() > 0 => d.column_space(),
            _ => Matrix::zeros(self.homs[i].dim(), 0),
        }
    }

    /// `dim Ext^i = nullity(d_i) - rank(d_{i-1})`.
    pub fn ext_dims(&self) -> Vec<usize> {
        (0..self.homs.len()).map(|i| self.kernel(i).cols() - self.image(i).cols()).collect()
    }

    /// Trace of `θ*` on each cohomology group, as the trace on the kernel
    /// minus the trace on the image.
    pub fn cohomology_traces(&self, theta_star: &[Matrix]) -> Result<Vec<Q>> {
        (0..self.homs.len())
            .map(|i| {
                let on_ker = Matrix::restricted_trace(&theta_star[i], &self.kernel(i));
                let on_im = Matrix::restricted_trace(&theta_star[i], &self.image(i));
                match (on_ker, on_im) {
                    (Some(a), Some(b)) => Ok(a - b),
                    _ => Err(Error::Consistency(format!("theta* does not preserve cocycles in degree {i}"))),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtResult {
    pub dims: Vec<usize>,
    pub theta_traces: Option<Vec<Q>>,
    pub ep: i64,
    pub ep_theta: Option<Q>,
    pub extended_dims: Option<Vec<usize>>,
}

impl ExtResult {
    pub fn from_dims(dims: Vec<usize>) -> Self {
        let ep = dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
        ExtResult { dims, theta_traces: None, ep, ep_theta: None, extended_dims: None }
    }

    /// Adds the `θ*` traces together with `EP^θ` and the dimensions
    /// `½ dim + ½ trace` over the extended algebra, which must be
    /// non-negative integers.
    pub fn with_traces(mut self, traces: Vec<Q>) -> Result<Self> {
        let mut ext = Vec::with_capacity(traces.len());
        for (i, (d, t)) in self.dims.iter().zip(&traces).enumerate() {
            if t.abs() > q(*d as i64) {
                return Err(Error::Consistency(format!("|trace| exceeds dim in degree {i}")));
            }
            let e = (q(*d as i64) + t) / q(2);
            match to_i64(&e) {
                Some(v) if v >= 0 => ext.push(v as usize),
                _ => return Err(Error::Consistency(format!("extended Ext dimension {e} in degree {i}"))),
            }
        }
        let ep_theta = traces.iter().enumerate().map(|(i, t)| if i % 2 == 0 { t.clone() } else { -t.clone() }).sum();
        self.theta_traces = Some(traces);
        self.ep_theta = Some(ep_theta);
        self.extended_dims = Some(ext);
        Ok(self)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "dims": self.dims, "ep": self.ep });
        if let Some(t) = &self.theta_traces {
            v["theta_traces"] = json!(t.iter().map(format_q).collect::<Vec<_>>());
        }
        if let Some(e) = &self.ep_theta {
            v["ep_theta"] = json!(format_q(e));
        }
        if let Some(e) = &self.extended_dims {
            v["extended_dims"] = json!(e);
        }
        v
    }
}

/// Exactness checks made on one complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralChecks {
    pub d_squared_zero: bool,
    pub tilde_equal: bool,
    /// `None` without `Θ`-structures
    pub theta_commutes: Option<bool>,
}

impl StructuralChecks {
    pub fn all_hold(&self) -> bool {
        self.d_squared_zero && self.tilde_equal && self.theta_commutes.unwrap_or(true)
    }
}

/// Full computation for a pair, with optional `Θ`-structures `(Θ_X, Θ_Y)`.
#[derive(Debug, Clone)]
pub struct ExtComputation {
    pub complex: KoszulComplex,
    pub result: ExtResult,
    pub checks: StructuralChecks,
}

pub fn ext(x: &HModule, y: &HModule, theta: Option<(&Matrix, &Matrix)>, cap: usize) -> Result<ExtComputation> {
    let cx = KoszulComplex::build(x, y, cap)?;
    let mut checks = StructuralChecks {
        d_squared_zero: cx.d_squared_zero(),
        tilde_equal: cx.tilde_differentials()? == cx.d,
        theta_commutes: None,
    };
    let mut result = ExtResult::from_dims(cx.ext_dims());
    if let Some((tx, ty)) = theta {
        let ts = cx.theta_star(tx, ty)?;
        let commutes = cx.theta_commutes(&ts);
        checks.theta_commutes = Some(commutes);
        if !commutes {
            return Err(Error::Consistency("theta* does not commute with d*".into()));
        }
        result = result.with_traces(cx.cohomology_traces(&ts)?)?;
    }
    Ok(ExtComputation { complex: cx, result, checks })
}

pub fn ext_dims(x: &HModule, y: &HModule) -> Result<ExtResult> {
    Ok(ext(x, y, None, SOLVER_CAP)?.result)
}

/// `EP_H(X, Y)` from the `W`-characters alone.
pub fn character_ep(x: &HModule, y: &HModule) -> Result<Q> {
    check_pair(x, y)?;
    let table = x.table();
    let cls = Arc::new(table.conjugacy_classes());
    let cx = trace_class_function(table, &cls, x.t_gens(), None)?;
    let cy = trace_class_function(table, &cls, y.t_gens(), None)?;
    elliptic_pairing(&cx, &cy)
}

/// `EP^θ_H(X, Y)` from the twisted characters `w -> tr(π(w) Θ)`.
pub fn character_ep_theta(x: &HModule, y: &HModule, theta_x: &Matrix, theta_y: &Matrix) -> Result<Q> {
    check_pair(x, y)?;
    let table = x.table();
    let cls = Arc::new(table.twisted_classes());
    let cx = trace_class_function(table, &cls, x.t_gens(), Some(theta_x))?;
    let cy = trace_class_function(table, &cls, y.t_gens(), Some(theta_y))?;
    twisted_elliptic_pairing(&cx, &cy)
}

#[cfg(test)]
mod tests;
