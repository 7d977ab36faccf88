use num_traits::{Signed, Zero};

use super::HModule;
use crate::error::{Error, Result};
use crate::linalg::{integer_roots, Matrix};
use crate::rational::{common_denominator, format_q, q, to_i64, Q};
use crate::rootsys::RootDatum;

/// A joint generalized eigenspace of the `V`-action.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    /// values on the simple roots
    pub weight: Vec<Q>,
    /// columns span the generalized eigenspace
    pub basis: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    /// sorted by weight
    pub entries: Vec<(Vec<Q>, usize)>,
}

impl WeightMultiset {
    pub fn from_list(list: impl IntoIterator<Item = Vec<Q>>) -> Self {
        let mut entries: Vec<(Vec<Q>, usize)> = Vec::new();
        let mut all: Vec<Vec<Q>> = list.into_iter().collect();
        all.sort();
        for w in all {
            match entries.last_mut() {
                Some((last, m)) if *last == w => *m += 1,
                _ => entries.push((w, 1)),
            }
        }
        WeightMultiset { entries }
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Vec<Q>> {
        self.entries.iter().map(|(w, _)| w)
    }
}

/// Decomposition of the weights into orbits, each named by its dominant
/// member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharacter {
    pub orbits: Vec<(Vec<Q>, usize)>,
}

impl CentralCharacter {
    pub fn is_single(&self) -> bool {
        self.orbits.len() == 1
    }

    pub fn single(&self) -> Option<&Vec<Q>> {
        if self.is_single() {
            Some(&self.orbits[0].0)
        } else {
            None
        }
    }

    pub fn disjoint_from(&self, other: &CentralCharacter) -> bool {
        self.orbits.iter().all(|(a, _)| other.orbits.iter().all(|(b, _)| a != b))
    }
}

pub fn format_weight(w: &[Q]) -> String {
    format!("({})", w.iter().map(format_q).collect::<Vec<_>>().join(","))
}

/// The representative of the `W_J`-orbit of `γ ∈ V∨` with `γ(a_j) >= 0`
/// for `j ∈ J`, using `(s_i γ)(a_l) = γ(a_l) - <a_l, a_i∨> γ(a_i)`.
pub fn dominant_representative(datum: &RootDatum, gamma: &[Q], j: &[usize]) -> Vec<Q> {
    let cartan = datum.cartan();
    let mut g = gamma.to_vec();
    while let Some(&i) = j.iter().find(|&&i| g[i].is_negative()) {
        let gi = g[i].clone();
        for (l, x) in g.iter_mut().enumerate() {
            *x -= &gi * q(cartan[i][l]);
        }
    }
    g
}

/// Integer eigenvalues with multiplicity of `d·m` for the common denominator
/// `d` of `m`; returns `(eigenvalue, multiplicity)` of `m`.
fn rational_eigenvalues(m: &Matrix) -> Result<Vec<(Q, usize)>> {
    let d = Q::from_integer(common_denominator(m.data()));
    let scaled = m.scale(&d);
    let bound = (0..scaled.rows())
        .map(|i| scaled.row(i).iter().map(|x| x.abs()).sum::<Q>())
        .max()
        .unwrap_or_else(Q::zero);
    let bound = to_i64(&bound.ceil()).ok_or_else(|| Error::IrrationalWeights("eigenvalue bound overflow".into()))?;
    let (roots, rest) = integer_roots(&scaled.charpoly(), bound);
    if rest.len() > 1 {
        return Err(Error::IrrationalWeights(format!(
            "characteristic polynomial keeps a factor of degree {} without rational roots",
            rest.len() - 1
        )));
    }
    Ok(roots.into_iter().map(|(r, k)| (q(r) / &d, k)).collect())
}

impl HModule {
    /// Joint generalized eigenspaces of the commuting `V`-action.
    pub fn weight_spaces(&self) -> Result<Vec<WeightSpace>> {
        let mut out = Vec::new();
        self.split(Matrix::identity(self.dim()), 0, Vec::new(), &mut out)?;
        out.sort_by(|a, b| a.weight.cmp(&b.weight));
        Ok(out)
    }

    fn split(&self, basis: Matrix, idx: usize, prefix: Vec<Q>, out: &mut Vec<WeightSpace>) -> Result<()> {
        if basis.cols() == 0 {
            return Ok(());
        }
        if idx == self.rank() {
            out.push(WeightSpace { weight: prefix, basis });
            return Ok(());
        }
        let image = self.v(idx) * &basis;
        let r = Matrix::solve_in_span(&basis, &image)
            .ok_or_else(|| Error::Consistency("V-action does not preserve a weight space".into()))?;
        for (lambda, mult) in rational_eigenvalues(&r)? {
            let shifted = &r - &Matrix::scalar(r.rows(), &lambda);
            let kernel = shifted.pow(mult).kernel();
            let mut p = prefix.clone();
            p.push(lambda);
            self.split(&basis * &kernel, idx + 1, p, out)?;
        }
        Ok(())
    }

    pub fn weights(&self) -> Result<WeightMultiset> {
        let spaces = self.weight_spaces()?;
        let entries = spaces.into_iter().map(|s| (s.weight, s.basis.cols())).collect();
        Ok(WeightMultiset { entries })
    }

    /// Weights grouped into `W`-orbits (`W_J`-orbits for an `H_J`-module).
    pub fn central_character(&self) -> Result<CentralCharacter> {
        let mut orbits: Vec<(Vec<Q>, usize)> = Vec::new();
        for (w, m) in self.weights()?.entries {
            let rep = dominant_representative(self.datum(), &w, self.parabolic());
            match orbits.iter_mut().find(|(r, _)| *r == rep) {
                Some((_, k)) => *k += m,
                None => orbits.push((rep, m)),
            }
        }
        orbits.sort();
        Ok(CentralCharacter { orbits })
    }

    /// `γ(ω_a)` for every weight and fundamental weight.
    fn fundamental_pairings(&self) -> Result<Vec<Q>> {
        let omegas = self.datum().fundamental_weights();
        let mut out = Vec::new();
        for (g, _) in self.weights()?.entries {
            for om in &omegas {
                out.push(om.iter().zip(&g).map(|(a, b)| a * b).sum());
            }
        }
        Ok(out)
    }

    pub fn is_tempered(&self) -> Result<bool> {
        Ok(self.fundamental_pairings()?.iter().all(|x| !x.is_positive()))
    }

    pub fn is_discrete_series(&self) -> Result<bool> {
        Ok(self.fundamental_pairings()?.iter().all(Signed::is_negative))
    }
}

/// `s_{i1} ... s_{ik} γ` for `γ ∈ V∨` given on simple roots.
pub fn act_on_weight(datum: &RootDatum, word: &[usize], gamma: &[Q]) -> Vec<Q> {
    let c = datum.cartan();
    let mut g = gamma.to_vec();
    for &s in word.iter().rev() {
        let gs = g[s].clone();
        for (l, x) in g.iter_mut().enumerate() {
            *x -= &gs * q(c[s][l]);
        }
    }
    g
}

impl HModule {
    /// For an induced module, the multiset `{x(γ + ν) : x ∈ W^J, γ weight of U}`.
    pub fn predicted_induced_weights(&self) -> Result<Option<WeightMultiset>> {
        let Some(data) = self.induction() else { return Ok(None) };
        let table = self.table();
        let mut all = Vec::new();
        for (g, m) in data.u.weights()?.entries {
            let shifted: Vec<Q> = g.iter().zip(&data.nu).map(|(a, b)| a + b).collect();
            for &x in &data.reps {
                let w = act_on_weight(self.datum(), &table.word(x), &shifted);
                all.extend(std::iter::repeat_n(w, m));
            }
        }
        Ok(Some(WeightMultiset::from_list(all)))
    }
}
