use std::sync::Arc;

use num_traits::Zero;

use super::{HModule, InductionData};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{format_q, parse_q_list, q, Q};
use crate::rootsys::RootDatum;
use crate::weyl::WeylGroupTable;

fn signs_label(eps: &[i64]) -> String {
    eps.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect()
}

/// `{a1,a3}` for a subset of simple roots.
pub fn format_subset(j: &[usize]) -> String {
    if j.is_empty() {
        return "{}".into();
    }
    format!("{{{}}}", j.iter().map(|i| format!("a{}", i + 1)).collect::<Vec<_>>().join(","))
}

fn nu_label(nu: &[Q]) -> String {
    nu.iter().map(format_q).collect::<Vec<_>>().join(",")
}

/// Components of `J` joined by simple edges (`a_ij = a_ji = -1`); simple
/// roots in one component are `W_J`-conjugate.
fn simple_edge_components(datum: &RootDatum, j: &[usize]) -> Vec<Vec<usize>> {
    let c = datum.cartan();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &s in j {
        let linked: Vec<usize> = (0..comps.len())
            .filter(|&x| comps[x].iter().any(|&t| c[s][t] == -1 && c[t][s] == -1))
            .collect();
        let mut merged = vec![s];
        for &x in linked.iter().rev() {
            merged.extend(comps.remove(x));
        }
        merged.sort_unstable();
        comps.push(merged);
    }
    comps
}

/// The weight of the one-dimensional `H_J`-module with signs `eps` (indexed
/// like `j`) on which `V_J^⊥` acts by zero: the element `γ` of the span of
/// the coroots of `J` with `γ(a_l) = eps_l k_l`.
pub fn parabolic_weight(datum: &RootDatum, j: &[usize], eps: &[i64]) -> Result<Vec<Q>> {
    let n = datum.rank();
    let c = datum.cartan();
    if j.is_empty() {
        return Ok(vec![Q::zero(); n]);
    }
    // Σ_j c_j <a_l, a_j∨> = eps_l k_l
    let m = Matrix::from_rows(j.iter().map(|&l| j.iter().map(|&jj| q(c[jj][l])).collect()).collect());
    let rhs: Vec<Q> = j.iter().zip(eps).map(|(&l, &e)| q(e) * &datum.k()[l]).collect();
    let coeffs = m
        .inverse()
        .ok_or_else(|| Error::Consistency("parabolic Cartan matrix is singular".into()))?
        .mul_vec(&rhs);
    Ok((0..n).map(|i| j.iter().zip(&coeffs).map(|(&jj, x)| x * q(c[jj][i])).sum()).collect())
}

/// Steinberg weight `γ = -k` on simple roots, in the span of the coroots of
/// `J` (all of `V∨` for `J = Δ`).
pub fn steinberg_weight(datum: &RootDatum, j: &[usize]) -> Vec<Q> {
    parabolic_weight(datum, j, &vec![-1; j.len()]).expect("Steinberg weight")
}

/// One-dimensional `H_J`-module with `t_{s_j} = eps_j` and `V` acting by
/// the forced weight plus `nu` (which must vanish on `J`).
pub fn parabolic_one_dim(table: &Arc<WeylGroupTable>, j: &[usize], eps: &[i64], nu: &[Q]) -> Result<HModule> {
    let datum = table.datum();
    let n = datum.rank();
    if eps.len() != j.len() || nu.len() != n {
        return Err(Error::Dimension(format!("need {} signs and {n} values of nu", j.len())));
    }
    if eps.iter().any(|&e| e != 1 && e != -1) {
        return Err(Error::Parameter("signs must be +1 or -1".into()));
    }
    for comp in simple_edge_components(datum, j) {
        let signs: Vec<i64> = comp.iter().map(|s| eps[j.iter().position(|x| x == s).unwrap()]).collect();
        if signs.iter().any(|&e| e != signs[0]) {
            return Err(Error::SignsNotOrbitConstant(format!(
                "a{} and a{} are conjugate but carry different signs",
                comp[0] + 1,
                comp[signs.iter().position(|&e| e != signs[0]).unwrap()] + 1
            )));
        }
    }
    if let Some(&bad) = j.iter().find(|&&s| !nu[s].is_zero()) {
        return Err(Error::Induction(format!("nu(a{}) must vanish for a{} in J", bad + 1, bad + 1)));
    }
    let gamma = parabolic_weight(datum, j, eps)?;
    let t = eps.iter().map(|&e| Matrix::scalar(1, &q(e))).collect();
    let v = (0..n).map(|i| Matrix::scalar(1, &(&gamma[i] + &nu[i]))).collect();
    let mut label = format!("C[{}]", signs_label(eps));
    if j.is_empty() {
        label = format!("C_({})", nu_label(nu));
    } else if nu.iter().any(|x| !x.is_zero()) {
        label = format!("{label}+nu({})", nu_label(nu));
    }
    HModule::validated(table.clone(), j.to_vec(), t, v, label)
}

/// One-dimensional `H`-module with `t_{s_i} = eps_i`; its weight is forced by
/// the cross relation to be `γ(a_i) = eps_i k_i`.
pub fn one_dim_module(table: &Arc<WeylGroupTable>, eps: &[i64]) -> Result<HModule> {
    let n = table.rank();
    if eps.len() != n {
        return Err(Error::Dimension(format!("need {n} signs")));
    }
    for orbit in table.datum().orbits() {
        if orbit.iter().any(|&i| eps[i] != eps[orbit[0]]) {
            return Err(Error::SignsNotOrbitConstant(format!(
                "signs {} differ on the orbit of a{}",
                signs_label(eps),
                orbit[0] + 1
            )));
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let m = parabolic_one_dim(table, &all, eps, &vec![Q::zero(); n])?;
    let label = if eps.iter().all(|&e| e < 0) {
        "St".to_string()
    } else if eps.iter().all(|&e| e > 0) {
        "triv".to_string()
    } else {
        format!("C[{}]", signs_label(eps))
    };
    Ok(m.with_label(label))
}

pub fn steinberg(table: &Arc<WeylGroupTable>) -> HModule {
    one_dim_module(table, &vec![-1; table.rank()]).expect("Steinberg module")
}

pub fn trivial(table: &Arc<WeylGroupTable>) -> HModule {
    one_dim_module(table, &vec![1; table.rank()]).expect("trivial module")
}

/// `X(∅, C_γ)`.
pub fn principal_series(table: &Arc<WeylGroupTable>, gamma: &[Q]) -> Result<HModule> {
    let u = parabolic_one_dim(table, &[], &[], gamma)?;
    let x = induced_module(&u, &vec![Q::zero(); table.rank()])?;
    Ok(x.with_label(format!("X(0,({}))", nu_label(gamma))))
}

/// `X(J, St_J, 0)` for a rigid `J`.
pub fn rigid_module(table: &Arc<WeylGroupTable>, j: &[usize]) -> Result<HModule> {
    if table.subset_stabilizer_count(j) != 1 {
        return Err(Error::Unsupported(format!("{} is not rigid", format_subset(j))));
    }
    let n = table.rank();
    let u = parabolic_one_dim(table, j, &vec![-1; j.len()], &vec![Q::zero(); n])?;
    induced_module(&u, &vec![Q::zero(); n])
}

/// `H ⊗_{H_J} (U ⊗ C_ν)` with basis `t_x ⊗ u_k`, `x ∈ W^J` in table order.
pub fn induced_module(u: &HModule, nu: &[Q]) -> Result<HModule> {
    let table = u.table().clone();
    let datum = table.datum().clone();
    let n = datum.rank();
    let j = u.parabolic().to_vec();
    if nu.len() != n {
        return Err(Error::Dimension(format!("nu needs {n} values")));
    }
    if let Some(&bad) = j.iter().find(|&&s| !nu[s].is_zero()) {
        return Err(Error::Induction(format!("nu(a{}) must vanish for a{} in J", bad + 1, bad + 1)));
    }
    let report = u.check_relations();
    if !report.is_ok() {
        return Err(Error::Induction(format!("inducing module fails relations: {}", report.violations.join("; "))));
    }
    let reps = table.min_coset_reps(&j);
    let d = u.dim();
    let dim = reps.len() * d;
    let mut pos = vec![usize::MAX; table.order()];
    for (p, &x) in reps.iter().enumerate() {
        pos[x] = p;
    }

    // t_{s_i}: s_i x = x' y, t_x ⊗ u -> t_{x'} ⊗ π_U(t_y) u
    let mut t = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = Matrix::zeros(dim, dim);
        for (p, &x) in reps.iter().enumerate() {
            let (x2, y) = table.parabolic_decompose(table.left(x, i), &j);
            m.set_block(pos[x2] * d, p * d, &u.word_matrix(&table.word(y))?);
        }
        t.push(m);
    }

    // a_a (t_x ⊗ u) with x = s_f x1:
    //   T_f (a_a - <a_a, a_f∨> a_f)(t_{x1} ⊗ u) + k_f <a_a, a_f∨> t_{x1} ⊗ u
    let cartan = datum.cartan();
    let k = datum.k();
    let mut v = vec![Matrix::zeros(dim, dim); n];
    for (a, va) in v.iter_mut().enumerate() {
        let base = &Matrix::scalar(d, &nu[a]) + u.v(a);
        va.set_block(0, 0, &base);
    }
    for (p, &x) in reps.iter().enumerate().skip(1) {
        let (f, x1) = table.split_first(x).expect("non-identity coset representative");
        let p1 = pos[x1];
        debug_assert!(p1 < p);
        let prev_f = v[f].columns(p1 * d, d);
        let mut cols = Vec::with_capacity(n);
        for a in 0..n {
            let c = q(cartan[f][a]);
            let pushed = &v[a].columns(p1 * d, d) - &prev_f.scale(&c);
            let mut col = &t[f] * &pushed;
            let kc = &k[f] * &c;
            if !kc.is_zero() {
                for r in 0..d {
                    col[(p1 * d + r, r)] += &kc;
                }
            }
            cols.push(col);
        }
        for (a, col) in cols.iter().enumerate() {
            v[a].set_block(0, p * d, col);
        }
    }

    let label = if nu.iter().all(Zero::is_zero) {
        format!("X({},{})", format_subset(&j), u.label())
    } else {
        format!("X({},{},({}))", format_subset(&j), u.label(), nu_label(nu))
    };
    let mut x = HModule::validated(table.clone(), (0..n).collect(), t, v, label)
        .map_err(|e| Error::Consistency(format!("induced module: {e}")))?;
    x.induced = Some(Arc::new(InductionData { j, u: u.clone(), nu: nu.to_vec(), reps }));
    Ok(x)
}

fn parse_subset(s: &str, n: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(vec![]);
    }
    let mut j = s
        .split(',')
        .map(|x| {
            let i: usize = x.trim().trim_start_matches('a').parse().map_err(|_| Error::Parse(format!("bad index {x:?}")))?;
            if i == 0 || i > n {
                return Err(Error::Parse(format!("simple root index {i} out of range 1..={n}")));
            }
            Ok(i - 1)
        })
        .collect::<Result<Vec<_>>>()?;
    j.sort_unstable();
    j.dedup();
    Ok(j)
}

fn parse_signs(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| match x.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        })
        .collect()
}

/// Builds a module from a short name:
///
/// * `steinberg`, `trivial`, `onedim:+,-,...`
/// * `principal` or `principal:g1,g2,...` (the weight's values on simple roots)
/// * `induced:J[:triv][:nu=...]`, e.g. `induced:1,3` for `X({a1,a3}, St, 0)`
/// * `rigid:J`, like `induced:J` but rejects non-rigid `J`
pub fn builtin_module(table: &Arc<WeylGroupTable>, spec: &str) -> Result<HModule> {
    let n = table.rank();
    let mut parts = spec.trim().split(':');
    let head = parts.next().unwrap_or("").to_ascii_lowercase();
    let rest: Vec<&str> = parts.collect();
    match head.as_str() {
        "steinberg" | "st" if rest.is_empty() => Ok(steinberg(table)),
        "trivial" | "triv" if rest.is_empty() => Ok(trivial(table)),
        "onedim" if rest.len() == 1 => one_dim_module(table, &parse_signs(rest[0])?),
        "principal" => {
            let gamma = match rest.as_slice() {
                [] => vec![Q::zero(); n],
                [g] => parse_q_list(g)?,
                _ => return Err(Error::Parse(format!("bad principal series spec {spec:?}"))),
            };
            if gamma.len() != n {
                return Err(Error::Dimension(format!("principal series weight needs {n} values")));
            }
            principal_series(table, &gamma)
        }
        "induced" | "rigid" if !rest.is_empty() => {
            let j = parse_subset(rest[0], n)?;
            let mut sign = -1;
            let mut nu = vec![Q::zero(); n];
            for opt in &rest[1..] {
                if *opt == "triv" {
                    sign = 1;
                } else if *opt == "st" {
                    sign = -1;
                } else if let Some(vals) = opt.strip_prefix("nu=") {
                    nu = parse_q_list(vals)?;
                } else {
                    return Err(Error::Parse(format!("unknown option {opt:?} in {spec:?}")));
                }
            }
            if head == "rigid" {
                if sign != -1 || nu.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Parse("rigid modules take no options".into()));
                }
                return rigid_module(table, &j);
            }
            let u = parabolic_one_dim(table, &j, &vec![sign; j.len()], &vec![Q::zero(); n])?;
            induced_module(&u, &nu)
        }
        _ => Err(Error::Parse(format!("unknown module spec {spec:?}"))),
    }
}
