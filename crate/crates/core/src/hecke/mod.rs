//! Finite-dimensional modules of the graded affine Hecke algebra `H` (and of
//! its parabolic subalgebras `H_J`) as explicit rational matrices.
//!
//! A module stores one matrix per simple reflection `s_j` with `j ∈ J` and
//! one matrix per simple root `a_i` for the action of `V`. For an `H`-module
//! `J = Δ`.

mod construct;
pub mod io;
mod restrict;
mod theta;
mod weights;

use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::Zero;

use crate::charpair::word_product;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use crate::rootsys::RootDatum;
use crate::weyl::WeylGroupTable;

pub use construct::{
    builtin_module, format_subset, induced_module, one_dim_module, parabolic_one_dim, parabolic_weight, principal_series,
    rigid_module, steinberg, steinberg_weight, trivial,
};
pub use restrict::RestrictionSplit;
pub use theta::{
    find_theta_structure, is_intertwiner, natural_theta, theta_structure, theta_twist, ThetaMethod, ThetaStructure,
};
pub use weights::{act_on_weight, dominant_representative, format_weight, CentralCharacter, WeightMultiset, WeightSpace};

#[derive(Debug, Clone)]
pub struct HModule {
    table: Arc<WeylGroupTable>,
    j: Vec<usize>,
    dim: usize,
    /// indexed by simple root; empty 0×0 for reflections outside `J`
    t: Vec<Matrix>,
    v: Vec<Matrix>,
    label: String,
    induced: Option<Arc<InductionData>>,
}

/// Equal data: same root datum, generators, matrices and label.
impl PartialEq for HModule {
    fn eq(&self, other: &Self) -> bool {
        self.datum() == other.datum()
            && self.j == other.j
            && self.t == other.t
            && self.v == other.v
            && self.label == other.label
    }
}

/// How an induced module was built: `X = H ⊗_{H_J} (U ⊗ C_ν)` with basis
/// `t_x ⊗ u` for `x` in `reps`.
#[derive(Debug, Clone, PartialEq)]
pub struct InductionData {
    pub j: Vec<usize>,
    pub u: HModule,
    pub nu: Vec<Q>,
    pub reps: Vec<usize>,
}

/// Violated relations, one line each; empty means the matrices define a
/// module.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `m_ij` from the Cartan entries.
pub fn braid_order(a_ij: i64, a_ji: i64) -> usize {
    match a_ij * a_ji {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        p => panic!("non-crystallographic Cartan product {p}"),
    }
}

impl HModule {
    /// Builds a module from raw matrices; `t` holds matrices for the
    /// reflections in `j` (in the order of `j`). Shapes are checked here,
    /// relations by [`HModule::check_relations`].
    pub fn new(
        table: Arc<WeylGroupTable>,
        j: Vec<usize>,
        t: Vec<Matrix>,
        v: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = table.rank();
        let mut j = j;
        if j.iter().any(|&s| s >= n) || t.len() != j.len() || v.len() != n {
            return Err(Error::Dimension(format!(
                "need {} t-matrices and {n} v-matrices, got {} and {}",
                j.len(),
                t.len(),
                v.len()
            )));
        }
        let dim = v.first().map(Matrix::rows).unwrap_or(0);
        if dim == 0 {
            return Err(Error::Dimension("module of dimension 0".into()));
        }
        for m in t.iter().chain(&v) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!("expected {dim}×{dim}, found {}×{}", m.rows(), m.cols())));
            }
        }
        let mut tt = vec![Matrix::zeros(0, 0); n];
        for (s, m) in j.iter().zip(t) {
            tt[*s] = m;
        }
        j.sort_unstable();
        j.dedup();
        Ok(HModule { table, j, dim, t: tt, v, label: label.into(), induced: None })
    }

    /// Like [`HModule::new`] but rejects matrices that fail the relations.
    pub fn validated(
        table: Arc<WeylGroupTable>,
        j: Vec<usize>,
        t: Vec<Matrix>,
        v: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let m = Self::new(table, j, t, v, label)?;
        let report = m.check_relations();
        if !report.is_ok() {
            return Err(Error::Relations(report.violations.join("; ")));
        }
        Ok(m)
    }

    pub fn table(&self) -> &Arc<WeylGroupTable> {
        &self.table
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        self.table.datum()
    }

    pub fn rank(&self) -> usize {
        self.table.rank()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn induction(&self) -> Option<&InductionData> {
        self.induced.as_deref()
    }

    /// Reflections generating the finite part.
    pub fn parabolic(&self) -> &[usize] {
        &self.j
    }

    pub fn is_full(&self) -> bool {
        self.j.len() == self.rank()
    }

    pub fn t(&self, i: usize) -> &Matrix {
        assert!(self.j.contains(&i), "s{} is not a generator of this module", i + 1);
        &self.t[i]
    }

    /// All generator matrices indexed by simple root (0×0 outside `J`).
    pub fn t_gens(&self) -> &[Matrix] {
        &self.t
    }

    /// Action of the simple root `a_i`.
    pub fn v(&self, i: usize) -> &Matrix {
        &self.v[i]
    }

    pub fn v_gens(&self) -> &[Matrix] {
        &self.v
    }

    /// Action of `v = Σ c_i a_i`.
    pub fn v_action(&self, v: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, a) in v.iter().zip(&self.v) {
            if !c.is_zero() {
                m = &m + &a.scale(c);
            }
        }
        m
    }

    /// Matrix of `t_w`, multiplying the generators along the stored reduced
    /// word of `w`.
    pub fn group_action_matrix(&self, w: usize) -> Result<Matrix> {
        let word = self.table.word(w);
        self.word_matrix(&word)
    }

    /// Product `t_{s_{i1}} ... t_{s_{ik}}` for any word in the generators.
    pub fn word_matrix(&self, word: &[usize]) -> Result<Matrix> {
        if let Some(&bad) = word.iter().find(|i| !self.j.contains(i)) {
            return Err(Error::Dimension(format!("s{} does not act on this module", bad + 1)));
        }
        Ok(word_product(&self.t, word, self.dim))
    }

    /// `ṽ = v - ½ Σ_{β>0} k_β <v, β∨> t_{s_β}` acting on the module.
    pub fn tilde_matrix(&self, v: &[Q]) -> Result<Matrix> {
        if !self.is_full() {
            return Err(Error::Unsupported("tilde elements are formed in H, not in a parabolic subalgebra".into()));
        }
        let datum = self.datum();
        let mut m = self.v_action(v);
        for beta in datum.positive_roots() {
            let c = datum.pair_coroot(v, beta)? * datum.k_of_root(beta) / q(2);
            if c.is_zero() {
                continue;
            }
            let s = self.table.reflection_element(beta)?;
            m = &m - &self.group_action_matrix(s)?.scale(&c);
        }
        Ok(m)
    }

    /// `t_{s_i} ã_j = (s_i a_j)~ t_{s_i}` for every simple reflection and
    /// simple root.
    pub fn tilde_identity_holds(&self) -> Result<bool> {
        let n = self.rank();
        for i in 0..n {
            let s = self.datum().simple_reflection(i);
            for j in 0..n {
                let mut v = vec![Q::zero(); n];
                v[j] = q(1);
                let lhs = self.t(i) * &self.tilde_matrix(&v)?;
                let rhs = &self.tilde_matrix(&s.mul_vec(&v))? * self.t(i);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every defining relation of `H_J`, checked exactly.
    pub fn check_relations(&self) -> RelationReport {
        let mut bad = Vec::new();
        let cartan = self.datum().cartan();
        let k = self.datum().k();
        let id = Matrix::identity(self.dim);
        for &i in &self.j {
            if !(&self.t[i] * &self.t[i]).is_identity() {
                bad.push(format!("t_s{0}^2 != 1", i + 1));
            }
        }
        for (x, &i) in self.j.iter().enumerate() {
            for &j in &self.j[x + 1..] {
                let m = braid_order(cartan[i][j], cartan[j][i]);
                let lhs: Vec<usize> = (0..m).map(|p| if p % 2 == 0 { i } else { j }).collect();
                let rhs: Vec<usize> = (0..m).map(|p| if p % 2 == 0 { j } else { i }).collect();
                if word_product(&self.t, &lhs, self.dim) != word_product(&self.t, &rhs, self.dim) {
                    bad.push(format!("braid relation of length {m} fails for (s{}, s{})", i + 1, j + 1));
                }
            }
        }
        for a in 0..self.rank() {
            for b in a + 1..self.rank() {
                if &self.v[a] * &self.v[b] != &self.v[b] * &self.v[a] {
                    bad.push(format!("a{} and a{} do not commute", a + 1, b + 1));
                }
            }
        }
        // t_i a_a - s_i(a_a) t_i = k_i <a_a, a_i∨>
        for &i in &self.j {
            for a in 0..self.rank() {
                let c = cartan[i][a];
                let s_v = &self.v[a] - &self.v[i].scale(&q(c));
                let lhs = &(&self.t[i] * &self.v[a]) - &(&s_v * &self.t[i]);
                if lhs != id.scale(&(&k[i] * q(c))) {
                    bad.push(format!("cross relation fails for (s{}, a{})", i + 1, a + 1));
                }
            }
        }
        RelationReport { violations: bad }
    }

    /// Module over the same algebra with every matrix conjugated by `p`:
    /// `x -> p x p^{-1}`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        let pinv = p.inverse().ok_or_else(|| Error::Dimension("change of basis is singular".into()))?;
        let conj = |m: &Matrix| &(p * m) * &pinv;
        let t = self.j.iter().map(|&i| conj(&self.t[i])).collect();
        let v = self.v.iter().map(conj).collect();
        Self::new(self.table.clone(), self.j.clone(), t, v, self.label.clone())
    }

    pub fn direct_sum(&self, other: &HModule) -> Result<Self> {
        if self.j != other.j || self.datum() != other.datum() {
            return Err(Error::Dimension("direct sum of modules over different algebras".into()));
        }
        let t = self.j.iter().map(|&i| self.t[i].direct_sum(&other.t[i])).collect();
        let v = self.v.iter().zip(&other.v).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new(self.table.clone(), self.j.clone(), t, v, format!("{} + {}", self.label, other.label))
    }

    /// Short multi-line description of the matrices.
    pub fn describe(&self) -> String {
        let mut s = format!("{} (dim {}) over {}\n", self.label, self.dim, self.datum().name());
        for &i in &self.j {
            let _ = writeln!(s, "  t_s{} = {:?}", i + 1, self.t[i]);
        }
        for (a, m) in self.v.iter().enumerate() {
            let _ = writeln!(s, "  a{} = {:?}", a + 1, m);
        }
        s
    }
}
