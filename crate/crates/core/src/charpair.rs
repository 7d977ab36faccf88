//! Class functions on Weyl groups and on the `θ` coset of `W ⋊ <θ>`, the
//! elliptic pairings, and induction from parabolic subgroups.
//!
//! A twisted class function is a function of `w` standing for its value at
//! `wθ`; it is constant on `θ`-twisted classes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{format_q, q, Q};
use crate::weyl::{parabolic_name, ConjClassSet, WeylGroupTable};

#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    classes: Arc<ConjClassSet>,
    values: Vec<Q>,
}

impl ClassFunction {
    pub fn new(classes: Arc<ConjClassSet>, values: Vec<Q>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::Dimension(format!(
                "{} values for {} classes",
                values.len(),
                classes.len()
            )));
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn zero(classes: Arc<ConjClassSet>) -> Self {
        let n = classes.len();
        ClassFunction { classes, values: vec![Q::zero(); n] }
    }

    pub fn constant(classes: Arc<ConjClassSet>, c: Q) -> Self {
        let n = classes.len();
        ClassFunction { classes, values: vec![c; n] }
    }

    /// Indicator function of class `c`.
    pub fn indicator(classes: Arc<ConjClassSet>, c: usize) -> Self {
        let mut f = Self::zero(classes);
        f.values[c] = Q::one();
        f
    }

    /// Evaluates `f` on each class representative.
    pub fn from_fn(classes: Arc<ConjClassSet>, f: impl Fn(usize) -> Q) -> Self {
        let values = classes.reps.iter().map(|&w| f(w)).collect();
        ClassFunction { classes, values }
    }

    pub fn classes(&self) -> &Arc<ConjClassSet> {
        &self.classes
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &Q {
        &self.values[c]
    }

    /// Value at a group element, if it lies in the domain.
    pub fn eval(&self, w: usize) -> Option<&Q> {
        self.classes.class_of(w).map(|c| &self.values[c])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_domain(self, other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { classes: self.classes.clone(), values })
    }

    pub fn scale(&self, c: &Q) -> Self {
        ClassFunction { classes: self.classes.clone(), values: self.values.iter().map(|x| x * c).collect() }
    }

    /// JSON object from representative words to canonical rationals.
    pub fn to_json(&self) -> Value {
        let m: BTreeMap<String, String> = self
            .classes
            .rep_words
            .iter()
            .zip(&self.values)
            .map(|(w, v)| (w.clone(), format_q(v)))
            .collect();
        serde_json::to_value(m).expect("string map")
    }
}

fn same_domain(f: &ClassFunction, g: &ClassFunction) -> Result<()> {
    let (a, b) = (&f.classes, &g.classes);
    if Arc::ptr_eq(a, b) || (a.group == b.group && a.twisted == b.twisted && a.reps == b.reps) {
        Ok(())
    } else {
        Err(Error::GroupMismatch(describe(a), describe(b)))
    }
}

fn describe(c: &ConjClassSet) -> String {
    format!("{}{}", c.group, if c.twisted { " twisted" } else { "" })
}

/// `g_{i1} g_{i2} ... g_{ik}` for a word in the generators.
pub fn word_product(gens: &[Matrix], word: &[usize], dim: usize) -> Matrix {
    let mut m = Matrix::identity(dim);
    for &i in word {
        m = &m * &gens[i];
    }
    m
}

/// Character of a representation given by matrices of the simple
/// reflections (indexed by simple root; entries outside the domain's
/// generating set are never used). Twisted class sets need the operator `Θ`,
/// and then the value at `w` is `tr(π(w) Θ)`.
pub fn trace_class_function(
    table: &WeylGroupTable,
    classes: &Arc<ConjClassSet>,
    gens: &[Matrix],
    theta: Option<&Matrix>,
) -> Result<ClassFunction> {
    let dim = gens.iter().find(|m| m.rows() > 0).map(Matrix::rows).unwrap_or(0);
    if classes.twisted != theta.is_some() {
        return Err(Error::Dimension(if classes.twisted {
            "twisted character needs a theta operator".into()
        } else {
            "theta operator given for an untwisted character".into()
        }));
    }
    let values = classes
        .reps
        .iter()
        .map(|&w| {
            let m = word_product(gens, &table.word(w), dim);
            match theta {
                Some(t) => (&m * t).trace(),
                None => m.trace(),
            }
        })
        .collect();
    ClassFunction::new(classes.clone(), values)
}

/// `w -> tr(w | ∧^i V)` (for twisted classes, of `wθ`), from the
/// characteristic polynomial of the integer matrix.
pub fn exterior_character(table: &WeylGroupTable, classes: &Arc<ConjClassSet>, i: usize) -> Result<ClassFunction> {
    let n = table.rank();
    if i > n {
        return Err(Error::Dimension(format!("exterior power {i} of a {n}-dimensional space")));
    }
    Ok(ClassFunction::from_fn(classes.clone(), |w| {
        let mut m = table.element_matrix(w);
        if classes.twisted {
            m = &m * &table.theta().matrix;
        }
        // det(tI - M) = Σ_i (-1)^i e_i t^{n-i}
        let c = m.charpoly();
        let sign = if i.is_multiple_of(2) { q(1) } else { q(-1) };
        sign * &c[n - i]
    }))
}

pub fn sign_character(table: &WeylGroupTable, classes: &Arc<ConjClassSet>) -> ClassFunction {
    ClassFunction::from_fn(classes.clone(), |w| if table.length(w).is_multiple_of(2) { q(1) } else { q(-1) })
}

fn weighted_sum(f: &ClassFunction, g: &ClassFunction, weight: impl Fn(usize) -> i64) -> Result<Q> {
    same_domain(f, g)?;
    let cls = &f.classes;
    let mut s = Q::zero();
    for c in 0..cls.len() {
        let w = weight(c);
        if w != 0 {
            s += &f.values[c] * &g.values[c] * q(cls.size(c) as i64 * w);
        }
    }
    Ok(s / q(cls.universe_size as i64))
}

/// Standard inner product `(1/|G|) Σ f(g) g(g)` (all values rational).
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Q> {
    weighted_sum(f, g, |_| 1)
}

/// `(1/|W|) Σ_w f(w) g(w) det(1 - w)`.
pub fn elliptic_pairing(f: &ClassFunction, g: &ClassFunction) -> Result<Q> {
    if f.classes.twisted || g.classes.twisted {
        return Err(Error::GroupMismatch(describe(&f.classes), describe(&g.classes)));
    }
    let dets = f.classes.dets.clone();
    weighted_sum(f, g, |c| dets[c])
}

/// `(1/|W|) Σ_w f(wθ) g(wθ) det(1 - wθ)`.
pub fn twisted_elliptic_pairing(f: &ClassFunction, g: &ClassFunction) -> Result<Q> {
    if !f.classes.twisted || !g.classes.twisted {
        return Err(Error::GroupMismatch(describe(&f.classes), describe(&g.classes)));
    }
    let dets = f.classes.dets.clone();
    weighted_sum(f, g, |c| dets[c])
}

/// Induction from `W_J` (or the `θ` coset of `W_J ⋊ <θ>`) to `target`:
/// `Ind f(C) = |W| / (|C| |W_J|) Σ_{u ∈ W_J ∩ C} f(u)`.
pub fn induce_class_function(
    table: &WeylGroupTable,
    j: &[usize],
    f: &ClassFunction,
    target: &Arc<ConjClassSet>,
) -> Result<ClassFunction> {
    let expected = parabolic_name(&table.name(), j);
    if f.classes.group != expected {
        return Err(Error::GroupMismatch(describe(&f.classes), expected));
    }
    if f.classes.twisted != target.twisted || target.group != table.name() {
        return Err(Error::GroupMismatch(describe(&f.classes), describe(target)));
    }
    let wj = q(f.classes.universe_size as i64);
    let order = q(table.order() as i64);
    let values = (0..target.len())
        .map(|c| {
            let s: Q = target.members[c].iter().filter_map(|&u| f.eval(u)).sum();
            s * &order / (q(target.size(c) as i64) * &wj)
        })
        .collect();
    ClassFunction::new(target.clone(), values)
}

/// Restriction of a class function on W to the classes of a parabolic.
pub fn restrict_class_function(g: &ClassFunction, sub: &Arc<ConjClassSet>) -> Result<ClassFunction> {
    if g.classes.twisted != sub.twisted {
        return Err(Error::GroupMismatch(describe(&g.classes), describe(sub)));
    }
    let values = sub
        .reps
        .iter()
        .map(|&u| g.eval(u).cloned().ok_or_else(|| Error::GroupMismatch(describe(&g.classes), describe(sub))))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(sub.clone(), values)
}

/// True when `f` vanishes on every elliptic class, i.e. `f` lies in the
/// radical of the (twisted) elliptic pairing.
pub fn radical_membership(f: &ClassFunction) -> bool {
    (0..f.classes.len()).all(|c| !f.classes.is_elliptic(c) || f.values[c].is_zero())
}

/// Rank of the (twisted) elliptic pairing on all class functions. In the
/// class-indicator basis the Gram matrix is diagonal with entries
/// `|C| det_C / |W|`, so this is the number of elliptic classes.
pub fn ell_space_dimension(table: &WeylGroupTable, twisted: bool) -> usize {
    let cls = if twisted { table.twisted_classes() } else { table.conjugacy_classes() };
    cls.gram_rank()
}

/// Rank of the span of all class functions induced from proper parabolics
/// (for twisted classes: from `θ`-stable proper parabolics), computed from
/// the indicator functions of each parabolic's classes.
pub fn induced_span_rank(table: &WeylGroupTable, target: &Arc<ConjClassSet>) -> Result<usize> {
    let subsets = if target.twisted {
        table.theta_stable_proper_subsets()
    } else {
        crate::weyl::all_subsets(table.rank()).into_iter().filter(|j| j.len() < table.rank()).collect()
    };
    let mut rows = Vec::new();
    for j in subsets {
        let sub = Arc::new(table.parabolic_classes(&j, target.twisted)?);
        for c in 0..sub.len() {
            let f = ClassFunction::indicator(sub.clone(), c);
            rows.push(induce_class_function(table, &j, &f, target)?.values);
        }
    }
    Ok(Matrix::from_rows(rows).rank())
}

/// A class function on `W ⋊ <θ>` (or `W_J ⋊ <θ>`), given by its two cosets.
#[derive(Debug, Clone)]
pub struct ExtendedClassFunction {
    pub plain: ClassFunction,
    pub twisted: ClassFunction,
}

/// Every line of the chain of equalities behind the parabolic Frobenius
/// trick, each evaluated separately.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusTrickReport {
    pub lines: [Q; 4],
    /// `Σ_{w ∈ W_J} f(wθ) g(wθ)`
    pub parabolic_sum: Q,
    pub holds: bool,
}

/// Checks, for `f` on `W ⋊ <θ>` and `g` on `W_J ⋊ <θ>` with `θ(J) = J`:
///
/// `Σ_W f(wθ) Ind g(wθ)`
/// `= 2|W| <f, Ind g>_{W⋊θ} - |W| <f, Ind g>_W`
/// `= 2|W| <Res f, g>_{W_J⋊θ} - |W| <Res f, g>_{W_J}`
/// `= |W|/|W_J| Σ_{W_J} f(wθ) g(wθ)`,
///
/// and that the last sum vanishes when the first does.
pub fn frobenius_trick_check(
    table: &WeylGroupTable,
    j: &[usize],
    f: &ExtendedClassFunction,
    g: &ExtendedClassFunction,
) -> Result<FrobeniusTrickReport> {
    if !table.theta().fixes_subset(j) {
        return Err(Error::NotThetaStable(j.iter().map(|i| i + 1).collect()));
    }
    let w = q(table.order() as i64);
    let wj = q(g.plain.classes.universe_size as i64);
    let ind0 = induce_class_function(table, j, &g.plain, f.plain.classes())?;
    let ind1 = induce_class_function(table, j, &g.twisted, f.twisted.classes())?;

    let line1 = inner_product(&f.twisted, &ind1)? * &w;

    let ext_full = (inner_product(&f.plain, &ind0)? * &w + inner_product(&f.twisted, &ind1)? * &w) / (q(2) * &w);
    let line2 = q(2) * &w * ext_full - &w * inner_product(&f.plain, &ind0)?;

    let r0 = restrict_class_function(&f.plain, g.plain.classes())?;
    let r1 = restrict_class_function(&f.twisted, g.twisted.classes())?;
    let sub_full = (inner_product(&r0, &g.plain)? * &wj + inner_product(&r1, &g.twisted)? * &wj) / (q(2) * &wj);
    let line3 = q(2) * &w * sub_full - &w * inner_product(&r0, &g.plain)?;

    let parabolic_sum = inner_product(&r1, &g.twisted)? * &wj;
    let line4 = &w / &wj * &parabolic_sum;

    let chain = line1 == line2 && line2 == line3 && line3 == line4;
    let implication = !line1.is_zero() || parabolic_sum.is_zero();
    Ok(FrobeniusTrickReport { lines: [line1, line2, line3, line4], parabolic_sum, holds: chain && implication })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;
    use crate::rootsys::{Family, RootDatum};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn table(f: Family, n: usize) -> WeylGroupTable {
        WeylGroupTable::new(Arc::new(RootDatum::with_unit_parameters(f, n).unwrap())).unwrap()
    }

    fn random_fn(rng: &mut ChaCha8Rng, classes: &Arc<ConjClassSet>) -> ClassFunction {
        let v = (0..classes.len()).map(|_| q_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect();
        ClassFunction::new(classes.clone(), v).unwrap()
    }

    /// θ-invariant random class function on W_J (θ restricted to W_J can be
    /// outer, e.g. swapping the factors of A1×A1 in A3).
    fn random_theta_invariant(rng: &mut ChaCha8Rng, t: &WeylGroupTable, classes: &Arc<ConjClassSet>) -> ClassFunction {
        let f = random_fn(rng, classes);
        ClassFunction::from_fn(classes.clone(), |w| {
            (f.eval(w).unwrap() + f.eval(t.theta_of(w)).unwrap()) / q(2)
        })
    }

    #[test]
    fn a2_pairings() {
        let t = table(Family::A, 2);
        let cls = Arc::new(t.conjugacy_classes());
        let sgn = sign_character(&t, &cls);
        assert_eq!(elliptic_pairing(&sgn, &sgn).unwrap(), q(1));
        let tw = Arc::new(t.twisted_classes());
        let st = sign_character(&t, &tw);
        assert_eq!(twisted_elliptic_pairing(&st, &st).unwrap(), q(1));
        assert!(!radical_membership(&st));
        assert!(radical_membership(&ClassFunction::zero(tw.clone())));
        assert!(elliptic_pairing(&sgn, &st).is_err());

        let a1 = table(Family::A, 1);
        let c1 = Arc::new(a1.conjugacy_classes());
        let triv = ClassFunction::constant(c1.clone(), q(1));
        assert_eq!(elliptic_pairing(&triv, &triv).unwrap(), q(1));
    }

    #[test]
    fn exterior_characters() {
        let t = table(Family::B, 3);
        let cls = Arc::new(t.conjugacy_classes());
        let e0 = exterior_character(&t, &cls, 0).unwrap();
        assert!(e0.values().iter().all(|v| *v == q(1)));
        let top = exterior_character(&t, &cls, 3).unwrap();
        assert_eq!(top, sign_character(&t, &cls));
        for (c, &w) in cls.reps.iter().enumerate() {
            let alt: Q = (0..=3)
                .map(|i| {
                    let v = exterior_character(&t, &cls, i).unwrap().values[c].clone();
                    if i % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum();
            assert_eq!(alt, q(t.det_ellipticity(w, false)));
            // det(1 + w) = Σ_i tr(∧^i w)
            let sum: Q = (0..=3).map(|i| exterior_character(&t, &cls, i).unwrap().values[c].clone()).sum();
            let m = &Matrix::identity(3) + &t.element_matrix(w);
            assert_eq!(sum, m.determinant());
        }
    }

    #[test]
    fn induction_from_parabolics() {
        let t = table(Family::A, 2);
        let cls = Arc::new(t.conjugacy_classes());
        // regular character from the trivial subgroup
        let triv_e = Arc::new(t.parabolic_classes(&[], false).unwrap());
        let reg = induce_class_function(&t, &[], &ClassFunction::constant(triv_e, q(1)), &cls).unwrap();
        assert_eq!(reg.values(), &[q(6), q(0), q(0)]);
        // sign of W_{a1} induced: (3, -1, 0)
        let sub = Arc::new(t.parabolic_classes(&[0], false).unwrap());
        let ind = induce_class_function(&t, &[0], &sign_character(&t, &sub), &cls).unwrap();
        assert_eq!(ind.values(), &[q(3), q(-1), q(0)]);
        for g in [sign_character(&t, &cls), ClassFunction::constant(cls.clone(), q(1))] {
            assert_eq!(elliptic_pairing(&ind, &g).unwrap(), q(0));
        }
    }

    #[test]
    fn frobenius_reciprocity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = table(Family::A, 3);
        let cls = Arc::new(t.conjugacy_classes());
        let tw = Arc::new(t.twisted_classes());
        for j in [vec![0], vec![0, 2], vec![1], vec![0, 1]] {
            let sub = Arc::new(t.parabolic_classes(&j, false).unwrap());
            let f = random_fn(&mut rng, &sub);
            let g = random_fn(&mut rng, &cls);
            let lhs = inner_product(&induce_class_function(&t, &j, &f, &cls).unwrap(), &g).unwrap();
            let rhs = inner_product(&f, &restrict_class_function(&g, &sub).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            if t.theta().fixes_subset(&j) {
                let subt = Arc::new(t.parabolic_classes(&j, true).unwrap());
                let f = random_fn(&mut rng, &subt);
                let g = random_fn(&mut rng, &tw);
                let ind = induce_class_function(&t, &j, &f, &tw).unwrap();
                assert!(radical_membership(&ind));
                let lhs = inner_product(&ind, &g).unwrap();
                let rhs = inner_product(&f, &restrict_class_function(&g, &subt).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(t.parabolic_classes(&[0], true).is_err());
    }

    #[test]
    fn frobenius_trick_chain() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let t = table(Family::A, 3);
        let cls = Arc::new(t.conjugacy_classes());
        let tw = Arc::new(t.twisted_classes());
        let j = vec![0, 2];
        let sub0 = Arc::new(t.parabolic_classes(&j, false).unwrap());
        let sub1 = Arc::new(t.parabolic_classes(&j, true).unwrap());
        for _ in 0..5 {
            let f = ExtendedClassFunction { plain: random_fn(&mut rng, &cls), twisted: random_fn(&mut rng, &tw) };
            let g = ExtendedClassFunction {
                plain: random_theta_invariant(&mut rng, &t, &sub0),
                twisted: random_fn(&mut rng, &sub1),
            };
            let r = frobenius_trick_check(&t, &j, &f, &g).unwrap();
            assert!(r.holds, "{r:?}");
        }
        let f = ExtendedClassFunction { plain: random_fn(&mut rng, &cls), twisted: random_fn(&mut rng, &tw) };
        let g = ExtendedClassFunction {
            plain: ClassFunction::zero(sub0.clone()),
            twisted: ClassFunction::zero(sub1.clone()),
        };
        let r = frobenius_trick_check(&t, &j, &f, &g).unwrap();
        assert!(r.holds && r.parabolic_sum.is_zero());
    }

    #[test]
    fn elliptic_dimensions() {
        let t = table(Family::A, 2);
        assert_eq!(ell_space_dimension(&t, true), 2);
        assert_eq!(ell_space_dimension(&t, false), 1);
        let tw = Arc::new(t.twisted_classes());
        assert_eq!(tw.len() - induced_span_rank(&t, &tw).unwrap(), 2);
        let cls = Arc::new(t.conjugacy_classes());
        assert_eq!(cls.len() - induced_span_rank(&t, &cls).unwrap(), 1);
    }

    #[test]
    fn json_form() {
        let t = table(Family::A, 1);
        let cls = Arc::new(t.conjugacy_classes());
        let f = ClassFunction::new(cls, vec![q_frac(1, 2), q(-3)]).unwrap();
        assert_eq!(f.to_json().to_string(), r#"{"e":"1/2","s1":"-3"}"#);
    }
}
