use num_traits::{Signed, Zero};

use super::HModule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::sqrt_exact;
use crate::sparse::{solve_intertwiners, unflatten};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaMethod {
    /// unique solution of the intertwiner system
    Solved,
    /// `t_x ⊗ u -> t_{θ(x)} ⊗ Θ_U u` on a module induced from `θ`-stable data
    Induced,
    /// supplied by the caller
    Given,
}

/// An involution `Θ` with `Θ π(h) Θ = π(θ(h))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaStructure {
    pub matrix: Matrix,
    pub method: ThetaMethod,
}

impl ThetaStructure {
    pub fn given(x: &HModule, matrix: Matrix) -> Result<Self> {
        if !(&matrix * &matrix).is_identity() || !is_intertwiner(x, &matrix)? {
            return Err(Error::NoThetaStructure("supplied matrix is not an involutive intertwiner".into()));
        }
        Ok(ThetaStructure { matrix, method: ThetaMethod::Given })
    }
}

fn check_stable(x: &HModule) -> Result<Vec<usize>> {
    let theta = x.table().theta();
    if !theta.fixes_subset(x.parabolic()) {
        return Err(Error::NotThetaStable(x.parabolic().iter().map(|i| i + 1).collect()));
    }
    Ok(theta.perm.clone())
}

/// `X^θ`: `t_{s_i}` acts as `t_{s_π(i)}` and `a_i` as `a_π(i)`.
pub fn theta_twist(x: &HModule) -> Result<HModule> {
    let perm = check_stable(x)?;
    let t = x.parabolic().iter().map(|&i| x.t(perm[i]).clone()).collect();
    let v = (0..x.rank()).map(|i| x.v(perm[i]).clone()).collect();
    HModule::validated(x.table().clone(), x.parabolic().to_vec(), t, v, format!("{}^theta", x.label()))
}

fn generator_pairs(x: &HModule, perm: &[usize]) -> Vec<(Matrix, Matrix)> {
    let mut pairs = Vec::new();
    for &i in x.parabolic() {
        pairs.push((x.t(perm[i]).clone(), x.t(i).clone()));
    }
    for i in 0..x.rank() {
        pairs.push((x.v(perm[i]).clone(), x.v(i).clone()));
    }
    pairs
}

/// Whether `m π(h) = π(θ(h)) m` on generators.
pub fn is_intertwiner(x: &HModule, m: &Matrix) -> Result<bool> {
    let perm = check_stable(x)?;
    Ok(generator_pairs(x, &perm).iter().all(|(l, r)| l * m == m * r))
}

/// Rescales `m` with `m² = λ` to an involution and fixes the sign so that
/// the first nonzero entry (row-major) is positive.
fn normalize(m: Matrix) -> Result<Matrix> {
    let sq = &m * &m;
    let lambda = sq[(0, 0)].clone();
    if sq != Matrix::scalar(m.rows(), &lambda) {
        return Err(Error::NoThetaStructure("intertwiner does not square to a scalar".into()));
    }
    let s = sqrt_exact(&lambda).filter(|s| !s.is_zero()).ok_or_else(|| {
        Error::NoThetaStructure(format!("intertwiner squares to {lambda}, not a positive rational square"))
    })?;
    let mut m = m.scale(&s.recip());
    if m.data().iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        m = -&m;
    }
    Ok(m)
}

/// Solves for `Θ` directly. Fails when `X ≇ X^θ` or when the intertwiner
/// space has dimension above one.
pub fn find_theta_structure(x: &HModule) -> Result<ThetaStructure> {
    let perm = check_stable(x)?;
    let pairs = generator_pairs(x, &perm);
    let refs: Vec<(&Matrix, &Matrix)> = pairs.iter().map(|(l, r)| (l, r)).collect();
    let ns = solve_intertwiners(&refs, x.dim(), x.dim());
    match ns.len() {
        0 => Err(Error::NoThetaStructure(format!("{} is not isomorphic to its theta-twist", x.label()))),
        1 => Ok(ThetaStructure {
            matrix: normalize(unflatten(&ns.dense(0), x.dim(), x.dim()))?,
            method: ThetaMethod::Solved,
        }),
        d => Err(Error::AmbiguousThetaStructure(d)),
    }
}

/// `Θ(t_x ⊗ u) = t_{θ(x)} ⊗ Θ_U u` for a module induced from `θ`-stable
/// data `(J, U, ν)`.
pub fn natural_theta(x: &HModule) -> Result<ThetaStructure> {
    let data = x
        .induction()
        .ok_or_else(|| Error::NoThetaStructure(format!("{} carries no induction data", x.label())))?;
    let table = x.table();
    let theta = table.theta();
    if !theta.fixes_subset(&data.j) {
        return Err(Error::NotThetaStable(data.j.iter().map(|i| i + 1).collect()));
    }
    if (0..x.rank()).any(|i| data.nu[theta.perm[i]] != data.nu[i]) {
        return Err(Error::NoThetaStructure("nu is not theta-invariant".into()));
    }
    let theta_u = theta_structure(&data.u)?.matrix;
    let d = data.u.dim();
    let mut m = Matrix::zeros(x.dim(), x.dim());
    for (p, &w) in data.reps.iter().enumerate() {
        let tw = table.theta_of(w);
        let p2 = data.reps.iter().position(|&r| r == tw).ok_or_else(|| {
            Error::Consistency("theta does not preserve the coset representatives".into())
        })?;
        m.set_block(p2 * d, p * d, &theta_u);
    }
    if !is_intertwiner(x, &m)? || !(&m * &m).is_identity() {
        return Err(Error::Consistency("induced theta operator fails to intertwine".into()));
    }
    Ok(ThetaStructure { matrix: normalize(m)?, method: ThetaMethod::Induced })
}

/// The unique `Θ` if the intertwiner space is a line, otherwise the induced
/// one when the module was built from `θ`-stable data.
pub fn theta_structure(x: &HModule) -> Result<ThetaStructure> {
    match find_theta_structure(x) {
        Err(Error::AmbiguousThetaStructure(d)) => natural_theta(x).map_err(|e| match e {
            Error::NoThetaStructure(_) | Error::NotThetaStable(_) => Error::AmbiguousThetaStructure(d),
            other => other,
        }),
        other => other,
    }
}
