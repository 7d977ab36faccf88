//! Weyl group enumeration and the combinatorics built on it.
//!
//! An element is identified by the images of the simple roots, stored as
//! signed root indices. Elements are numbered in breadth-first order from the
//! identity by left multiplication with simple reflections, so index order
//! refines length order and `0` is the identity.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{to_i64, Q};
use crate::rootsys::{DiagramInvolution, RootDatum};

pub const DEFAULT_CAP: usize = 10_000_000;

/// A group element together with its canonical data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub index: usize,
    pub key: Vec<usize>,
    pub word: Vec<usize>,
    pub length: usize,
}

#[derive(Debug)]
pub struct WeylGroupTable {
    datum: Arc<RootDatum>,
    theta: DiagramInvolution,
    rank: usize,
    order: usize,
    keys: Vec<u16>,
    lookup: HashMap<Vec<u16>, u32>,
    length: Vec<u32>,
    first: Vec<u8>,
    tail: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
    theta_elem: Vec<u32>,
    /// refl[j][r]: index of s_j applied to root r
    refl: Vec<Vec<u16>>,
    w0: u32,
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
}

/// Parses `"s1 s2 s1"` (or `"e"`) into zero-based letters.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split_whitespace()
        .map(|tok| {
            tok.strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| d >= 1)
                .map(|d| d - 1)
                .ok_or_else(|| Error::Parse(format!("bad letter {tok:?} in word")))
        })
        .collect()
}

impl WeylGroupTable {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        Self::with_cap(datum, DEFAULT_CAP)
    }

    pub fn with_cap(datum: Arc<RootDatum>, cap: usize) -> Result<Self> {
        let expected = datum.family().weyl_order(datum.rank());
        if expected > cap as u128 {
            return Err(Error::CapExceeded { order: expected, cap });
        }
        let n = datum.rank();
        let roots = datum.roots();
        let refl: Vec<Vec<u16>> = (0..n)
            .map(|j| {
                roots
                    .iter()
                    .map(|r| datum.root_index(&datum.reflect_root(j, r)).unwrap() as u16)
                    .collect()
            })
            .collect();

        let id: Vec<u16> = (0..n as u16).collect();
        let mut keys: Vec<u16> = id.clone();
        let mut lookup = HashMap::from([(id, 0u32)]);
        let mut length = vec![0u32];
        let mut first = vec![u8::MAX];
        let mut tail = vec![0u32];
        let mut left: Vec<u32> = Vec::new();
        let mut queue = VecDeque::from([0u32]);
        while let Some(w) = queue.pop_front() {
            let wi = w as usize;
            for j in 0..n {
                let key: Vec<u16> = keys[wi * n..(wi + 1) * n].iter().map(|&r| refl[j][r as usize]).collect();
                let idx = match lookup.get(&key) {
                    Some(&idx) => idx,
                    None => {
                        let idx = length.len() as u32;
                        keys.extend_from_slice(&key);
                        lookup.insert(key, idx);
                        length.push(length[wi] + 1);
                        first.push(j as u8);
                        tail.push(w);
                        queue.push_back(idx);
                        idx
                    }
                };
                left.push(idx);
            }
        }
        let order = length.len();
        if order as u128 != expected {
            return Err(Error::Consistency(format!("enumerated {order} elements, expected {expected}")));
        }

        // right multiplication: (w s_j)(a_i) = w(a_i) - <a_i, a_j∨> w(a_j)
        let mut right = vec![0u32; order * n];
        let cartan = datum.cartan();
        for w in 0..order {
            let k = &keys[w * n..(w + 1) * n];
            for j in 0..n {
                let wj = &roots[k[j] as usize];
                let key: Vec<u16> = (0..n)
                    .map(|i| {
                        let wi = &roots[k[i] as usize];
                        let c = cartan[j][i];
                        let img: Vec<i64> = wi.iter().zip(wj).map(|(a, b)| a - c * b).collect();
                        datum.root_index(&img).unwrap() as u16
                    })
                    .collect();
                right[w * n + j] = lookup[&key];
            }
        }

        let theta = datum.theta_involution();
        let mut inverse = vec![0u32; order];
        let mut theta_elem = vec![0u32; order];
        for w in 1..order {
            let f = first[w] as usize;
            let t = tail[w] as usize;
            inverse[w] = right[inverse[t] as usize * n + f];
            theta_elem[w] = left[theta_elem[t] as usize * n + theta.perm[f]];
        }
        let w0 = (0..order).max_by_key(|&w| length[w]).unwrap() as u32;

        Ok(WeylGroupTable {
            datum,
            theta,
            rank: n,
            order,
            keys,
            lookup,
            length,
            first,
            tail,
            left,
            right,
            inverse,
            theta_elem,
            refl,
            w0,
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn theta(&self) -> &DiagramInvolution {
        &self.theta
    }

    pub fn name(&self) -> String {
        self.datum.name()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn length(&self, w: usize) -> usize {
        self.length[w] as usize
    }

    pub fn key(&self, w: usize) -> &[u16] {
        &self.keys[w * self.rank..(w + 1) * self.rank]
    }

    pub fn find(&self, key: &[usize]) -> Option<usize> {
        let k: Vec<u16> = key.iter().map(|&x| x as u16).collect();
        self.lookup.get(&k).map(|&i| i as usize)
    }

    /// The stored reduced word (first letter applied last to a vector).
    pub fn word(&self, mut w: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        while w != 0 {
            out.push(self.first[w] as usize);
            w = self.tail[w] as usize;
        }
        out
    }

    /// For `w != e`: the first letter `i` of the stored word and `s_i w`.
    pub fn split_first(&self, w: usize) -> Option<(usize, usize)> {
        (w != 0).then(|| (self.first[w] as usize, self.tail[w] as usize))
    }

    pub fn format(&self, w: usize) -> String {
        format_word(&self.word(w))
    }

    pub fn element(&self, w: usize) -> WeylElement {
        WeylElement {
            index: w,
            key: self.key(w).iter().map(|&x| x as usize).collect(),
            word: self.word(w),
            length: self.length(w),
        }
    }

    /// `s_{i1} s_{i2} ... s_{ik}`, not necessarily reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut w = 0;
        for &i in word.iter().rev() {
            if i >= self.rank {
                return Err(Error::Parse(format!("letter s{} out of range", i + 1)));
            }
            w = self.left(w, i);
        }
        Ok(w)
    }

    /// `s_j · w`
    pub fn left(&self, w: usize, j: usize) -> usize {
        self.left[w * self.rank + j] as usize
    }

    /// `w · s_j`
    pub fn right(&self, w: usize, j: usize) -> usize {
        self.right[w * self.rank + j] as usize
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut out = b;
        let mut x = a;
        let mut letters = Vec::with_capacity(self.length(a));
        while x != 0 {
            letters.push(self.first[x] as usize);
            x = self.tail[x] as usize;
        }
        for &i in letters.iter().rev() {
            out = self.left(out, i);
        }
        out
    }

    /// `θ(w) = w0 w w0`.
    pub fn theta_of(&self, w: usize) -> usize {
        self.theta_elem[w] as usize
    }

    pub fn w0(&self) -> usize {
        self.w0 as usize
    }

    /// Signed index of `w(root)`.
    pub fn apply_to_root(&self, w: usize, root: usize) -> usize {
        let mut r = root;
        for &i in self.word(w).iter().rev() {
            r = self.refl[i][r] as usize;
        }
        r
    }

    pub fn sends_simple_positive(&self, w: usize, j: usize) -> bool {
        self.datum.is_positive_index(self.key(w)[j] as usize)
    }

    /// Matrix of `w` on V in the simple-root basis.
    pub fn element_matrix(&self, w: usize) -> Matrix {
        let cols: Vec<Vec<Q>> = self
            .key(w)
            .iter()
            .map(|&r| self.datum.root(r as usize).iter().map(|&x| crate::rational::q(x)).collect())
            .collect();
        Matrix::from_cols(self.rank, &cols)
    }

    /// `det(Id - w)` or, twisted, `det(Id - w θ)`.
    pub fn det_ellipticity(&self, w: usize, twisted: bool) -> i64 {
        let mut m = self.element_matrix(w);
        if twisted {
            m = &m * &self.theta.matrix;
        }
        let d = (&Matrix::identity(self.rank) - &m).determinant();
        to_i64(&d).expect("integer determinant")
    }

    /// The reflection `s_β` for a root given in coordinates.
    pub fn reflection_element(&self, root: &[i64]) -> Result<usize> {
        let c = self.datum.coroot(root)?;
        let key: Vec<usize> = (0..self.rank)
            .map(|j| {
                let p = to_i64(&c[j]).expect("integral coroot pairing");
                let mut img = crate::rootsys::unit(self.rank, j);
                for (x, r) in img.iter_mut().zip(root) {
                    *x -= p * r;
                }
                self.datum.root_index(&img).expect("reflection permutes roots")
            })
            .collect();
        Ok(self.find(&key).expect("reflection lies in W"))
    }

    /// Elements of the parabolic subgroup `W_J`, in increasing index order.
    pub fn parabolic_elements(&self, j: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(w) = queue.pop_front() {
            for &s in j {
                let x = self.left(w, s);
                if !seen[x] {
                    seen[x] = true;
                    out.push(x);
                    queue.push_back(x);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn longest_element(&self, j: &[usize]) -> usize {
        self.parabolic_elements(j).into_iter().max_by_key(|&w| self.length(w)).unwrap()
    }

    /// Minimal length representatives of `W / W_J`: `x(a_j) > 0` for all `j ∈ J`.
    pub fn min_coset_reps(&self, j: &[usize]) -> Vec<usize> {
        (0..self.order).filter(|&w| j.iter().all(|&s| self.sends_simple_positive(w, s))).collect()
    }

    /// `w = x · y` with `x ∈ W^J`, `y ∈ W_J`.
    pub fn parabolic_decompose(&self, w: usize, j: &[usize]) -> (usize, usize) {
        let mut x = w;
        while let Some(&s) = j.iter().find(|&&s| !self.sends_simple_positive(x, s)) {
            x = self.right(x, s);
        }
        let y = self.mul(self.inverse(x), w);
        (x, y)
    }

    /// Number of `w` with `w(J) = J` as a set of roots.
    pub fn subset_stabilizer_count(&self, j: &[usize]) -> usize {
        let mut target: Vec<u16> = j.iter().map(|&s| s as u16).collect();
        target.sort_unstable();
        (0..self.order)
            .filter(|&w| {
                let k = self.key(w);
                let mut img: Vec<u16> = j.iter().map(|&s| k[s]).collect();
                img.sort_unstable();
                img == target
            })
            .count()
    }

    /// All `J ⊆ Δ` with trivial stabilizer, largest first, then lexicographic.
    pub fn rigid_subsets(&self) -> Vec<Vec<usize>> {
        all_subsets(self.rank).into_iter().filter(|j| self.subset_stabilizer_count(j) == 1).collect()
    }

    /// Proper `J ⊊ Δ` with `θ(J) = J`.
    pub fn theta_stable_proper_subsets(&self) -> Vec<Vec<usize>> {
        all_subsets(self.rank)
            .into_iter()
            .filter(|j| j.len() < self.rank && self.theta.fixes_subset(j))
            .collect()
    }

    fn minimal_by_word(&self, members: &[usize]) -> usize {
        let min_len = members.iter().map(|&w| self.length(w)).min().unwrap();
        members
            .iter()
            .copied()
            .filter(|&w| self.length(w) == min_len)
            .min_by_key(|&w| self.word(w))
            .unwrap()
    }

    /// Orbits of `universe` under `w -> s_j w s_{σ(j)}` for `j ∈ gens`.
    fn orbits(&self, universe: &[usize], gens: &[usize], sigma: &[usize]) -> Vec<Vec<usize>> {
        let mut comp = vec![u32::MAX; self.order];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for &start in universe {
            if comp[start] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            comp[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &j in gens {
                    let x = self.right(self.left(w, j), sigma[j]);
                    if comp[x] == u32::MAX {
                        comp[x] = id;
                        members.push(x);
                        queue.push_back(x);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn class_set(&self, group: String, twisted: bool, orbits: Vec<Vec<usize>>) -> ConjClassSet {
        let mut classes: Vec<(usize, Vec<usize>)> =
            orbits.into_iter().map(|m| (self.minimal_by_word(&m), m)).collect();
        classes.sort_by(|a, b| {
            self.length(a.0).cmp(&self.length(b.0)).then_with(|| self.word(a.0).cmp(&self.word(b.0)))
        });
        let mut class_of = vec![u32::MAX; self.order];
        for (c, (_, m)) in classes.iter().enumerate() {
            for &w in m {
                class_of[w] = c as u32;
            }
        }
        let dets = classes.iter().map(|(r, _)| self.det_ellipticity(*r, twisted)).collect();
        let words = classes.iter().map(|(r, _)| self.format(*r)).collect();
        ConjClassSet {
            group,
            twisted,
            group_order: self.order,
            universe_size: classes.iter().map(|(_, m)| m.len()).sum(),
            reps: classes.iter().map(|(r, _)| *r).collect(),
            rep_words: words,
            members: classes.into_iter().map(|(_, m)| m).collect(),
            class_of,
            dets,
        }
    }

    pub fn conjugacy_classes(&self) -> ConjClassSet {
        let all: Vec<usize> = (0..self.order).collect();
        let gens: Vec<usize> = (0..self.rank).collect();
        self.class_set(self.name(), false, self.orbits(&all, &gens, &gens))
    }

    /// Orbits of `w -> x w θ(x)^{-1}`.
    pub fn twisted_classes(&self) -> ConjClassSet {
        let all: Vec<usize> = (0..self.order).collect();
        let gens: Vec<usize> = (0..self.rank).collect();
        self.class_set(self.name(), true, self.orbits(&all, &gens, &self.theta.perm))
    }

    /// Classes of `W_J` (twisted ones need `θ(J) = J`).
    pub fn parabolic_classes(&self, j: &[usize], twisted: bool) -> Result<ConjClassSet> {
        if twisted && !self.theta.fixes_subset(j) {
            return Err(Error::NotThetaStable(j.iter().map(|i| i + 1).collect()));
        }
        let universe = self.parabolic_elements(j);
        let ident: Vec<usize> = (0..self.rank).collect();
        let sigma = if twisted { self.theta.perm.clone() } else { ident };
        let mut set = self.class_set(parabolic_name(&self.name(), j), twisted, self.orbits(&universe, j, &sigma));
        set.universe_size = universe.len();
        Ok(set)
    }

    pub fn elliptic_class_count(&self, twisted: bool) -> usize {
        let cls = if twisted { self.twisted_classes() } else { self.conjugacy_classes() };
        cls.elliptic_count()
    }
}

pub fn parabolic_name(base: &str, j: &[usize]) -> String {
    let js: Vec<String> = j.iter().map(|i| (i + 1).to_string()).collect();
    format!("{base}[{}]", js.join(","))
}

/// Subsets of `0..n`, largest first, lexicographic within a size.
pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in (0..=n).rev() {
        out.extend(crate::linalg::subsets(n, size));
    }
    out
}

/// A partition of a set of group elements into (possibly twisted) classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassSet {
    pub group: String,
    pub twisted: bool,
    pub group_order: usize,
    /// number of elements covered (|W| or |W_J|)
    pub universe_size: usize,
    pub reps: Vec<usize>,
    pub rep_words: Vec<String>,
    pub members: Vec<Vec<usize>>,
    pub class_of: Vec<u32>,
    /// `det(1 - w)` or `det(1 - wθ)` on V, per class
    pub dets: Vec<i64>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, w: usize) -> Option<usize> {
        match self.class_of.get(w) {
            Some(&c) if c != u32::MAX => Some(c as usize),
            _ => None,
        }
    }

    pub fn is_elliptic(&self, c: usize) -> bool {
        self.dets[c] != 0
    }

    pub fn elliptic_count(&self) -> usize {
        self.dets.iter().filter(|d| **d != 0).count()
    }

    /// Diagonal of the pairing's Gram form in the class-indicator basis:
    /// `|C| det_C / |group|`. Its rank is the elliptic class count.
    pub fn gram_diagonal(&self) -> Vec<Q> {
        let n = Q::from_integer(self.universe_size.into());
        (0..self.len())
            .map(|c| Q::from_integer((self.size(c) as i64 * self.dets[c]).into()) / &n)
            .collect()
    }

    pub fn gram_rank(&self) -> usize {
        self.gram_diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// `W ⋊ <θ>` with elements `(w, ε)` indexed `w + ε|W|`.
#[derive(Debug)]
pub struct ExtendedGroupTable {
    base: Arc<WeylGroupTable>,
}

impl ExtendedGroupTable {
    pub fn new(base: Arc<WeylGroupTable>) -> Self {
        ExtendedGroupTable { base }
    }

    pub fn base(&self) -> &Arc<WeylGroupTable> {
        &self.base
    }

    pub fn order(&self) -> usize {
        2 * self.base.order()
    }

    pub fn split(&self, g: usize) -> (usize, bool) {
        let n = self.base.order();
        (g % n, g >= n)
    }

    pub fn join(&self, w: usize, eps: bool) -> usize {
        w + if eps { self.base.order() } else { 0 }
    }

    /// `(w, ε)(w', ε') = (w θ^ε(w'), ε ⊕ ε')`
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (w, e) = self.split(a);
        let (w2, e2) = self.split(b);
        let t = if e { self.base.theta_of(w2) } else { w2 };
        self.join(self.base.mul(w, t), e ^ e2)
    }

    pub fn inverse(&self, a: usize) -> usize {
        let (w, e) = self.split(a);
        // (w,1)^{-1} = (θ(w^{-1}), 1)
        let wi = self.base.inverse(w);
        self.join(if e { self.base.theta_of(wi) } else { wi }, e)
    }

    /// Linear action on V: `w` or `w ∘ θ`.
    pub fn matrix(&self, g: usize) -> Matrix {
        let (w, e) = self.split(g);
        let m = self.base.element_matrix(w);
        if e {
            &m * &self.base.theta().matrix
        } else {
            m
        }
    }

    /// Conjugacy classes of the `ε` coset, as sets of base indices `w`.
    pub fn coset_classes(&self, eps: bool) -> Vec<Vec<usize>> {
        let n = self.base.order();
        let r = self.base.rank();
        let mut gens: Vec<usize> = (0..r).map(|i| self.join(self.base.left(0, i), false)).collect();
        gens.push(self.join(0, true));
        let mut comp = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] {
                continue;
            }
            comp[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                let g0 = self.join(w, eps);
                for &g in &gens {
                    let c = self.mul(self.mul(g, g0), self.inverse(g));
                    let (x, e) = self.split(c);
                    debug_assert_eq!(e, eps);
                    if !comp[x] {
                        comp[x] = true;
                        members.push(x);
                        queue.push_back(x);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out.sort();
        out
    }
}
