use std::fmt::Display;
use std::sync::Arc;

use num_traits::Zero;

use super::{character_ep, character_ep_theta, ext, ExtResult, StructuralChecks, SOLVER_CAP};
use crate::charpair::trace_class_function;
use crate::error::Result;
use crate::hecke::{
    find_theta_structure, induced_module, parabolic_one_dim, rigid_module, theta_structure, theta_twist, HModule,
};
use crate::rational::{binomial, format_q, q, Q};
use crate::weyl::WeylGroupTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, expected: impl Display, actual: impl Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        CheckLine { name: name.into(), pass: expected == actual, expected, actual }
    }

    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, true, ok)
    }
}

fn list<T: Display>(xs: &[T]) -> String {
    format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn qlist(xs: &[Q]) -> String {
    format!("({})", xs.iter().map(format_q).collect::<Vec<_>>().join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidMode {
    /// Ext through the matrix complex plus the character-level pairings
    Full,
    /// pairings from characters and the restriction split only
    CharacterOnly,
}

#[derive(Debug, Clone)]
pub struct RigidReport {
    pub group: String,
    pub j: Vec<usize>,
    pub r: usize,
    pub dim: usize,
    pub checks: Vec<CheckLine>,
    pub result: Option<ExtResult>,
    pub structural: Option<StructuralChecks>,
}

impl RigidReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Builds `X = X(J, St_J, 0)` and checks every predicted quantity: Ext
/// dimensions `C(r, i)`, `θ*`-traces `(-1)^i C(r, i)`, `EP^θ = 2^r`,
/// `EP = 0` for `r >= 1`, irreducibility, the restriction split and
/// `X ≅ X^θ`.
pub fn rigid_verification(table: &Arc<WeylGroupTable>, j: &[usize], mode: RigidMode) -> Result<RigidReport> {
    let n = table.rank();
    let x = rigid_module(table, j)?;
    let r = n - j.len();
    let mut checks = Vec::new();

    let iso = find_theta_structure(&x);
    checks.push(CheckLine::flag("X isomorphic to its theta-twist", iso.is_ok()));
    let theta = theta_structure(&x)?.matrix;

    let split = x.parabolic_restriction_split()?;
    checks.push(CheckLine::new("restriction split dims", list(&[1, x.dim() - 1]), list(&[split.u_part.cols(), split.y_part.cols()])));
    checks.push(CheckLine::flag("restriction split with disjoint H_J central characters", split.holds()));

    let ep_expected = if r == 0 { 1 } else { 0 };
    let ep_theta_expected = q(1i64 << r);
    let ep_c = character_ep(&x, &x)?;
    let ep_theta_c = character_ep_theta(&x, &x, &theta, &theta)?;
    checks.push(CheckLine::new("character EP", ep_expected, format_q(&ep_c)));
    checks.push(CheckLine::new("character EP^theta", format_q(&ep_theta_expected), format_q(&ep_theta_c)));

    let (mut result, mut structural) = (None, None);
    if mode == RigidMode::Full {
        let comp = ext(&x, &x, Some((&theta, &theta)), SOLVER_CAP)?;
        let res = comp.result;
        let dims: Vec<usize> = (0..=n).map(|i| if i <= r { binomial(r, i) as usize } else { 0 }).collect();
        let traces: Vec<Q> = dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { q(d as i64) } else { q(-(d as i64)) }).collect();
        let extended: Vec<usize> = dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d } else { 0 }).collect();
        let got_traces = res.theta_traces.clone().unwrap_or_default();
        checks.push(CheckLine::new("irreducible: dim Ext^0", 1, res.dims[0]));
        checks.push(CheckLine::new("Ext dims", list(&dims), list(&res.dims)));
        checks.push(CheckLine::new("theta* traces", qlist(&traces), qlist(&got_traces)));
        checks.push(CheckLine::new("EP", ep_expected, res.ep));
        checks.push(CheckLine::new(
            "EP^theta",
            format_q(&ep_theta_expected),
            res.ep_theta.as_ref().map(format_q).unwrap_or_default(),
        ));
        checks.push(CheckLine::new("extended-algebra dims", list(&extended), list(&res.extended_dims.clone().unwrap_or_default())));
        checks.push(CheckLine::new("EP equals character EP", format_q(&ep_c), res.ep));
        checks.push(CheckLine::flag("d*d* = 0", comp.checks.d_squared_zero));
        checks.push(CheckLine::flag("tilde d* = d*", comp.checks.tilde_equal));
        checks.push(CheckLine::flag("theta* d* = d* theta*", comp.checks.theta_commutes == Some(true)));
        result = Some(res);
        structural = Some(comp.checks);
    }
    Ok(RigidReport { group: table.name(), j: j.to_vec(), r, dim: x.dim(), checks, result, structural })
}

#[derive(Debug, Clone)]
pub struct DeformationReport {
    pub degenerate: bool,
    pub central_characters_differ: bool,
    /// every `Ext^i(X_0, X_ν)` vanishes (matrix pipeline)
    pub ext_vanishes: bool,
    /// `EP^θ(X_0, X_ν)` from characters, when `X_ν` has a `Θ`-structure
    pub ep_theta: Option<Q>,
    /// `Res_W X_ν ≅ Res_W X_ν^θ`, by comparing characters
    pub res_w_theta_isomorphic: bool,
}

/// Compares `X_0 = X(J, U, 0)` with `X_ν = X(J, U, ν)` for `U` the Steinberg
/// module of `H_J` (`C_0` for `J = ∅`).
pub fn deformation_check(table: &Arc<WeylGroupTable>, j: &[usize], nu: &[Q]) -> Result<DeformationReport> {
    let n = table.rank();
    let zero = vec![Q::zero(); n];
    let u = parabolic_one_dim(table, j, &vec![-1; j.len()], &zero)?;
    let x0 = induced_module(&u, &zero)?;
    let xn = induced_module(&u, nu)?;
    let degenerate = nu.iter().all(Zero::is_zero);
    let differ = x0.central_character()?.disjoint_from(&xn.central_character()?);
    let ext_vanishes = ext(&x0, &xn, None, SOLVER_CAP)?.result.dims.iter().all(|&d| d == 0);
    let ep_theta = match (theta_structure(&x0), theta_structure(&xn)) {
        (Ok(a), Ok(b)) => Some(character_ep_theta(&x0, &xn, &a.matrix, &b.matrix)?),
        _ => None,
    };
    Ok(DeformationReport {
        degenerate,
        central_characters_differ: differ,
        ext_vanishes,
        ep_theta,
        res_w_theta_isomorphic: same_w_character(&xn, &theta_twist(&xn)?)?,
    })
}

fn same_w_character(a: &HModule, b: &HModule) -> Result<bool> {
    let table = a.table();
    let cls = Arc::new(table.conjugacy_classes());
    Ok(trace_class_function(table, &cls, a.t_gens(), None)? == trace_class_function(table, &cls, b.t_gens(), None)?)
}
