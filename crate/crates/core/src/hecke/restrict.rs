use super::weights::dominant_representative;
use super::{CentralCharacter, HModule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Q;

/// Restriction of `X(J, U, 0)` to `H_J` split by `H_J`-central character.
#[derive(Debug, Clone)]
pub struct RestrictionSplit {
    pub j: Vec<usize>,
    /// columns span the block with the central character of `U`
    pub u_part: Matrix,
    /// columns span the complementary block
    pub y_part: Matrix,
    pub u_character: CentralCharacter,
    pub y_character: CentralCharacter,
    /// the `U`-block is exactly `t_e ⊗ U`
    pub u_part_is_embedded_u: bool,
    /// both blocks are `H_J`-stable
    pub stable: bool,
    /// whether `span{t_x ⊗ u : x ≠ e}` is itself `H_J`-stable
    pub naive_complement_stable: bool,
}

impl RestrictionSplit {
    pub fn holds(&self) -> bool {
        self.u_part_is_embedded_u && self.stable && self.u_character.disjoint_from(&self.y_character)
    }
}

fn span_stable(x: &HModule, j: &[usize], basis: &Matrix) -> bool {
    if basis.cols() == 0 {
        return true;
    }
    j.iter()
        .map(|&i| x.t(i))
        .chain(x.v_gens())
        .all(|m| Matrix::solve_in_span(basis, &(m * basis)).is_some())
}

fn hstack(blocks: &[Matrix], rows: usize) -> Matrix {
    let cols: Vec<Vec<Q>> = blocks.iter().flat_map(|b| (0..b.cols()).map(|c| b.col(c))).collect();
    Matrix::from_cols(rows, &cols)
}

fn character_of(x: &HModule, j: &[usize], spaces: &[(Vec<Q>, usize)]) -> CentralCharacter {
    let mut orbits: Vec<(Vec<Q>, usize)> = Vec::new();
    for (w, m) in spaces {
        let rep = dominant_representative(x.datum(), w, j);
        match orbits.iter_mut().find(|(r, _)| *r == rep) {
            Some((_, k)) => *k += m,
            None => orbits.push((rep, *m)),
        }
    }
    orbits.sort();
    CentralCharacter { orbits }
}

impl HModule {
    /// `Res_{H_J} X = U ⊕ Y` for `X = X(J, U, 0)` with `J` rigid, where the
    /// summands are the generalized `H_J`-central-character blocks.
    pub fn parabolic_restriction_split(&self) -> Result<RestrictionSplit> {
        let data = self
            .induction()
            .ok_or_else(|| Error::Unsupported(format!("{} carries no induction data", self.label())))?;
        let j = data.j.clone();
        if self.table().subset_stabilizer_count(&j) != 1 {
            return Err(Error::Unsupported("restriction split is only asserted for rigid J".into()));
        }
        if data.nu.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return Err(Error::Unsupported("restriction split needs nu = 0".into()));
        }
        let u_char = data.u.central_character()?;
        let mut u_blocks = Vec::new();
        let mut y_blocks = Vec::new();
        let mut u_w = Vec::new();
        let mut y_w = Vec::new();
        for s in self.weight_spaces()? {
            let rep = dominant_representative(self.datum(), &s.weight, &j);
            let m = s.basis.cols();
            if u_char.orbits.iter().any(|(r, _)| *r == rep) {
                u_w.push((s.weight, m));
                u_blocks.push(s.basis);
            } else {
                y_w.push((s.weight, m));
                y_blocks.push(s.basis);
            }
        }
        let u_part = hstack(&u_blocks, self.dim());
        let y_part = hstack(&y_blocks, self.dim());
        let d = data.u.dim();
        let embedded = Matrix::identity(self.dim()).columns(0, d);
        let u_part_is_embedded_u = u_part.cols() == d && Matrix::solve_in_span(&u_part, &embedded).is_some();
        let naive = Matrix::identity(self.dim()).columns(d, self.dim() - d);
        Ok(RestrictionSplit {
            stable: span_stable(self, &j, &u_part) && span_stable(self, &j, &y_part),
            naive_complement_stable: span_stable(self, &j, &naive),
            u_character: character_of(self, &j, &u_w),
            y_character: character_of(self, &j, &y_w),
            u_part_is_embedded_u,
            u_part,
            y_part,
            j,
        })
    }
}
