//! Crystallographic root data in simple-root coordinates.
//!
//! `V` is the span of the roots and its basis is the set of simple roots, so
//! every vector of `V` is an integer (or rational) coefficient vector over
//! `a1..an`. Elements of `V∨` are stored by their values on the simple roots.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Number of roots of the irreducible system of this type.
    pub fn root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Weyl group order from the product of the fundamental degrees.
    pub fn weyl_order(self, rank: usize) -> u128 {
        let n = rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Cartan matrix with `c[i][j] = <a_j, a_i∨>`, Bourbaki numbering.
fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            for i in 0..3 {
                link(i, i + 1);
            }
        }
        Family::G => link(0, 1),
    }
    match family {
        // a_{n-1} long, a_n short
        Family::B => c[n - 1][n - 2] = -2,
        // a_n long
        Family::C => c[n - 2][n - 1] = -2,
        // a1, a2 long, a3, a4 short
        Family::F => c[2][1] = -2,
        // a1 short, a2 long
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// W-invariant form on V in the simple-root basis.
    form: Matrix,
    /// W-orbits of simple roots, each sorted, ordered by smallest member.
    orbits: Vec<Vec<usize>>,
    /// k on each simple root.
    k: Vec<Q>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootDatum {
    /// Builds the datum. `k` lists one value per W-orbit of simple roots
    /// (orbits ordered by their smallest simple root) or one value per simple
    /// root; an empty `k` means `k ≡ 1`.
    pub fn new(family: Family, rank: usize, k: &[Q]) -> Result<Self> {
        if !family.valid_rank(rank) {
            return Err(Error::InvalidType { family: family.letter(), rank });
        }
        let cartan = cartan_matrix(family, rank);
        let orbits = simple_root_orbits(&cartan);
        let k = expand_parameters(&orbits, rank, k)?;
        let form = invariant_form(&cartan);
        let positive = enumerate_positive_roots(&cartan);
        let mut index = HashMap::new();
        let npos = positive.len();
        for (i, r) in positive.iter().enumerate() {
            index.insert(r.clone(), i);
            index.insert(r.iter().map(|x| -x).collect(), npos + i);
        }
        let datum = RootDatum { family, rank, cartan, form, orbits, k, positive, index };
        if datum.roots().len() != family.root_count(rank) {
            return Err(Error::Consistency(format!(
                "{family}{rank}: reflection closure gave {} roots",
                datum.roots().len()
            )));
        }
        Ok(datum)
    }

    pub fn with_unit_parameters(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, &[])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> Matrix {
        Matrix::from_i64(&self.cartan)
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| unit(self.rank, i)).collect()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Parameter on each simple root.
    pub fn k(&self) -> &[Q] {
        &self.k
    }

    /// Parameter per orbit, in orbit order.
    pub fn k_per_orbit(&self) -> Vec<Q> {
        self.orbits.iter().map(|o| self.k[o[0]].clone()).collect()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// All roots: positive ones (by height, then coordinates) followed by
    /// their negatives in the same order. Indices into this list are the
    /// signed root indices used throughout the crate.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let neg = self.positive.iter().map(|r| r.iter().map(|x| -x).collect());
        self.positive.iter().cloned().chain(neg).collect()
    }

    pub fn root(&self, idx: usize) -> Vec<i64> {
        let n = self.positive.len();
        if idx < n {
            self.positive[idx].clone()
        } else {
            self.positive[idx - n].iter().map(|x| -x).collect()
        }
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.positive.len()
    }

    pub fn negate_index(&self, idx: usize) -> usize {
        let n = self.positive.len();
        if idx < n {
            idx + n
        } else {
            idx - n
        }
    }

    /// `(u, v)` for the invariant form.
    pub fn inner(&self, u: &[Q], v: &[Q]) -> Q {
        let fu = self.form.mul_vec(v);
        u.iter().zip(&fu).map(|(a, b)| a * b).sum()
    }

    /// The coroot of `root` as a functional: its values on the simple roots.
    pub fn coroot(&self, root: &[i64]) -> Result<Vec<Q>> {
        if self.root_index(root).is_none() {
            return Err(Error::NotARoot(format_root(root)));
        }
        let r = to_q(root);
        let rr = self.inner(&r, &r);
        Ok((0..self.rank)
            .map(|j| q(2) * self.inner(&to_q(&unit(self.rank, j)), &r) / &rr)
            .collect())
    }

    /// `<v, root∨>`.
    pub fn pair_coroot(&self, v: &[Q], root: &[i64]) -> Result<Q> {
        let c = self.coroot(root)?;
        Ok(v.iter().zip(&c).map(|(a, b)| a * b).sum())
    }

    /// Parameter `k` attached to an arbitrary root (k is constant on W-orbits,
    /// which for an irreducible system are the root lengths).
    pub fn k_of_root(&self, root: &[i64]) -> Q {
        let r = to_q(root);
        let len = self.inner(&r, &r);
        for i in 0..self.rank {
            let a = to_q(&unit(self.rank, i));
            if self.inner(&a, &a) == len {
                return self.k[i].clone();
            }
        }
        unreachable!("root length not attained by a simple root")
    }

    /// Matrix of the reflection `s_root` acting on V in the simple-root basis.
    pub fn reflection_matrix(&self, root: &[i64]) -> Result<Matrix> {
        let c = self.coroot(root)?;
        let n = self.rank;
        let mut m = Matrix::identity(n);
        for j in 0..n {
            for i in 0..n {
                m[(i, j)] -= &c[j] * q(root[i]);
            }
        }
        Ok(m)
    }

    pub fn simple_reflection(&self, i: usize) -> Matrix {
        self.reflection_matrix(&unit(self.rank, i)).expect("simple root")
    }

    /// Image of a root under the simple reflection `s_i`, in coordinates.
    pub fn reflect_root(&self, i: usize, root: &[i64]) -> Vec<i64> {
        let p: i64 = (0..self.rank).map(|j| root[j] * self.cartan[i][j]).sum();
        let mut out = root.to_vec();
        out[i] -= p;
        out
    }

    /// Fundamental weights in V, as coefficient vectors over the simple roots:
    /// `<ω_i, a_j∨> = δ_ij`.
    pub fn fundamental_weights(&self) -> Vec<Vec<Q>> {
        let inv = self.cartan_matrix().inverse().expect("Cartan matrix is invertible");
        (0..self.rank).map(|i| inv.col(i)).collect()
    }

    /// Fundamental coweights in V∨ (values on the simple roots):
    /// `<a_i, ω∨_j> = δ_ij`.
    pub fn fundamental_coweights(&self) -> Vec<Vec<Q>> {
        (0..self.rank).map(|j| to_q(&unit(self.rank, j))).collect()
    }

    /// Values of the simple coroot `a_i∨` on the simple roots.
    pub fn simple_coroot(&self, i: usize) -> Vec<Q> {
        self.cartan[i].iter().map(|&x| q(x)).collect()
    }

    /// `w0` as a matrix on V, found by driving a regular dominant vector to
    /// the antidominant chamber with simple reflections.
    pub fn longest_element_matrix(&self) -> Matrix {
        let n = self.rank;
        let rho: Vec<Q> = self.fundamental_weights().into_iter().fold(vec![Q::zero(); n], |acc, w| {
            acc.iter().zip(&w).map(|(a, b)| a + b).collect()
        });
        let mut v = rho;
        let mut w = Matrix::identity(n);
        loop {
            let step = (0..n).find(|&i| {
                let p: Q = (0..n).map(|j| &v[j] * q(self.cartan[i][j])).sum();
                p > Q::zero()
            });
            let Some(i) = step else { break };
            let s = self.simple_reflection(i);
            v = s.mul_vec(&v);
            w = &s * &w;
        }
        w
    }

    /// `θ = -w0`, with its permutation of the simple roots.
    pub fn theta_involution(&self) -> DiagramInvolution {
        let matrix = -&self.longest_element_matrix();
        let perm = (0..self.rank)
            .map(|i| {
                let col = matrix.col(i);
                (0..self.rank)
                    .find(|&j| col == to_q(&unit(self.rank, j)))
                    .expect("-w0 permutes the simple roots")
            })
            .collect();
        DiagramInvolution { perm, matrix }
    }

    /// `θ` applied to an element of V∨ given by its values on simple roots:
    /// `(θγ)(a_i) = γ(θ a_i) = γ(a_{π(i)})`.
    pub fn theta_on_dual(&self, gamma: &[Q]) -> Vec<Q> {
        let t = self.theta_involution();
        (0..self.rank).map(|i| gamma[t.perm[i]].clone()).collect()
    }

    pub fn subdatum_cartan(&self, j: &[usize]) -> Vec<Vec<i64>> {
        j.iter().map(|&a| j.iter().map(|&b| self.cartan[a][b]).collect()).collect()
    }
}

/// The involution `θ = -w0` on V and the permutation it induces on the
/// simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramInvolution {
    pub perm: Vec<usize>,
    pub matrix: Matrix,
}

impl DiagramInvolution {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply_to_subset(&self, j: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = j.iter().map(|&a| self.perm[a]).collect();
        out.sort_unstable();
        out
    }

    pub fn fixes_subset(&self, j: &[usize]) -> bool {
        let mut s = j.to_vec();
        s.sort_unstable();
        self.apply_to_subset(j) == s
    }
}

pub fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// `"a1+a2"`, `"2a1+a2"`, `"-a1-a2"`.
pub fn format_root(root: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in root.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn simple_root_orbits(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut comp = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![];
        let mut queue = VecDeque::from([start]);
        comp[start] = id;
        while let Some(i) = queue.pop_front() {
            members.push(i);
            for j in 0..n {
                // simple roots joined by a simple edge are W-conjugate
                if comp[j] == usize::MAX && cartan[i][j] == -1 && cartan[j][i] == -1 {
                    comp[j] = id;
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

fn expand_parameters(orbits: &[Vec<usize>], rank: usize, k: &[Q]) -> Result<Vec<Q>> {
    if k.is_empty() {
        return Ok(vec![Q::one(); rank]);
    }
    let mut out = vec![Q::zero(); rank];
    if k.len() == orbits.len() {
        for (o, val) in orbits.iter().zip(k) {
            for &i in o {
                out[i] = val.clone();
            }
        }
        return Ok(out);
    }
    if k.len() == rank {
        for o in orbits {
            if o.iter().any(|&i| k[i] != k[o[0]]) {
                return Err(Error::Parameter(format!(
                    "k is not constant on the orbit {:?}",
                    o.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
        }
        return Ok(k.to_vec());
    }
    Err(Error::Parameter(format!(
        "expected {} values (one per orbit) or {} (one per simple root), got {}",
        orbits.len(),
        rank,
        k.len()
    )))
}

/// Gram matrix `(a_i, a_j) = d_i c_ij / 2` with `d_i = (a_i, a_i)` solving
/// the symmetrizability condition.
fn invariant_form(cartan: &[Vec<i64>]) -> Matrix {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if d[j].is_none() && cartan[i][j] != 0 {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * q(cartan[i][j]) / q(cartan[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = &d[i] * q(cartan[i][j]) / q(2);
        }
    }
    debug_assert_eq!(g, g.transpose());
    g
}

fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    for r in &queue {
        seen.insert(r.clone(), ());
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| r[j] * cartan[i][j]).sum();
            let mut s = r.clone();
            s[i] -= p;
            if !seen.contains_key(&s) {
                seen.insert(s.clone(), ());
                queue.push_back(s);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_keys().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    fn datum(f: Family, n: usize) -> RootDatum {
        RootDatum::with_unit_parameters(f, n).unwrap()
    }

    /// Independent oracle: roots of A_n as e_i - e_j, B_n as ±e_i ± e_j, ±e_i
    /// and so on, counted in the usual Euclidean model.
    fn euclidean_root_count(f: Family, n: usize) -> usize {
        let mut count = 0;
        match f {
            Family::A => {
                for i in 0..=n {
                    for j in 0..=n {
                        if i != j {
                            count += 1;
                        }
                    }
                }
            }
            Family::B | Family::C => {
                count += 2 * n;
                for i in 0..n {
                    for _ in (i + 1)..n {
                        count += 4;
                    }
                }
            }
            Family::D => {
                for i in 0..n {
                    for _ in (i + 1)..n {
                        count += 4;
                    }
                }
            }
            _ => unreachable!(),
        }
        count
    }

    #[test]
    fn root_counts_match_euclidean_models() {
        for (f, n) in [(Family::A, 1), (Family::A, 4), (Family::B, 3), (Family::C, 4), (Family::D, 5)] {
            assert_eq!(datum(f, n).roots().len(), euclidean_root_count(f, n), "{f}{n}");
        }
        assert_eq!(datum(Family::G, 2).roots().len(), 12);
        assert_eq!(datum(Family::F, 4).roots().len(), 48);
        assert_eq!(datum(Family::E, 6).roots().len(), 72);
        assert_eq!(datum(Family::E, 8).roots().len(), 240);
    }

    #[test]
    fn a2_basics() {
        let d = datum(Family::A, 2);
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(d.reflection_matrix(&[1, 0]).unwrap(), Matrix::from_i64(&[vec![-1, 1], vec![0, 1]]));
        assert_eq!(d.fundamental_weights()[0], vec![q_frac(2, 3), q_frac(1, 3)]);
    }

    #[test]
    fn g2_has_two_lengths_and_two_orbits() {
        let d = RootDatum::new(Family::G, 2, &[q(1), q(2)]).unwrap();
        assert_eq!(d.orbits().len(), 2);
        let lengths: std::collections::BTreeSet<String> = d
            .positive_roots()
            .iter()
            .map(|r| d.inner(&to_q(r), &to_q(r)).to_string())
            .collect();
        assert_eq!(lengths.len(), 2);
        assert_eq!(d.k_of_root(&[3, 2]), q(2));
        assert_eq!(d.k_of_root(&[1, 1]), q(1));
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(RootDatum::with_unit_parameters(Family::A, 0), Err(Error::InvalidType { .. })));
        assert!(RootDatum::with_unit_parameters(Family::E, 5).is_err());
        assert!(matches!(RootDatum::new(Family::B, 2, &[q(1), q(2), q(3)]), Err(Error::Parameter(_))));
        assert!(matches!(RootDatum::new(Family::A, 2, &[q(1), q(2)]), Err(Error::Parameter(_))));
        let d = datum(Family::A, 2);
        assert!(matches!(d.reflection_matrix(&[2, 0]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn reflections_are_involutions_permuting_roots() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let d = datum(f, n);
            let roots = d.roots();
            for a in &roots {
                let s = d.reflection_matrix(a).unwrap();
                assert!((&s * &s).is_identity());
                let neg: Vec<Q> = a.iter().map(|&x| q(-x)).collect();
                assert_eq!(s.mul_vec(&to_q(a)), neg);
                let mut images: Vec<Vec<Q>> = roots.iter().map(|b| s.mul_vec(&to_q(b))).collect();
                let mut orig: Vec<Vec<Q>> = roots.iter().map(|b| to_q(b)).collect();
                images.sort();
                orig.sort();
                assert_eq!(images, orig);
            }
        }
    }

    #[test]
    fn theta_involutions() {
        assert_eq!(datum(Family::A, 2).theta_involution().perm, vec![1, 0]);
        assert!(datum(Family::B, 2).theta_involution().is_identity());
        assert_eq!(datum(Family::E, 6).theta_involution().perm, vec![5, 1, 4, 3, 2, 0]);
        assert_eq!(datum(Family::D, 5).theta_involution().perm, vec![0, 1, 2, 4, 3]);
        assert!(datum(Family::D, 4).theta_involution().is_identity());
        for (f, n) in [(Family::A, 4), (Family::E, 7), (Family::F, 4), (Family::D, 3)] {
            let t = datum(f, n).theta_involution();
            assert!((&t.matrix * &t.matrix).is_identity());
        }
    }

    #[test]
    fn w0_sends_positive_roots_to_negative() {
        for (f, n) in [(Family::A, 3), (Family::C, 3), (Family::E, 6)] {
            let d = datum(f, n);
            let w0 = d.longest_element_matrix();
            for r in d.positive_roots() {
                let img = w0.mul_vec(&to_q(r));
                assert!(img.iter().all(|x| *x <= Q::zero()));
            }
        }
    }

    #[test]
    fn fundamental_weight_duality() {
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::D, 4)] {
            let d = datum(f, n);
            for (i, w) in d.fundamental_weights().iter().enumerate() {
                for j in 0..n {
                    let p = d.pair_coroot(w, &unit(n, j)).unwrap();
                    assert_eq!(p, if i == j { q(1) } else { q(0) });
                }
            }
            let sum: Vec<Q> = d.fundamental_coweights().into_iter().fold(vec![q(0); n], |a, c| {
                a.iter().zip(&c).map(|(x, y)| x + y).collect()
            });
            assert!(sum.iter().all(|x| *x == q(1)));
        }
    }

    #[test]
    fn root_formatting() {
        assert_eq!(format_root(&[1, 1]), "a1+a2");
        assert_eq!(format_root(&[-2, -1, 0]), "-2a1-a2");
        assert_eq!(format_root(&[0, 3]), "3a2");
    }
}
