//! Restrictions of equivariant Schubert classes to fixed points, by Billey's formula.

use crate::error::{Error, Result};
use crate::matrix_forms::WeightAssignment;
use crate::perm::Permutation;
use crate::poly::{project_s1, LinForm, MultiPoly, UniPoly};

/// `sigma_v(w)` computed from the canonical reduced word of `w`.
pub fn schubert_restrict(v: &Permutation, w: &Permutation) -> Result<MultiPoly> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch { expected: w.n(), found: v.n() });
    }
    schubert_restrict_word(v, &w.reduced_word())
}

/// `sigma_v(w)` for `w = s_{word[0]} s_{word[1]} ...`, which must be a reduced word.
///
/// Sums, over reduced subwords with product `v`, the product of the roots
/// `s_{i_1} ... s_{i_{j-1}} (alpha_{i_j})` at the chosen positions `j`.
pub fn schubert_restrict_word(v: &Permutation, word: &[usize]) -> Result<MultiPoly> {
    let n = v.n();
    let w = Permutation::from_word(n, word)?;
    if w.length() != word.len() {
        return Err(Error::InvalidPermutation(format!("word {word:?} is not reduced")));
    }
    // roots[j] = (s_{i_1} ... s_{i_{j-1}})(alpha_{i_j}) as a pair (a, b) meaning t_a - t_b
    let mut prefix = Permutation::identity(n);
    let mut roots = Vec::with_capacity(word.len());
    for &i in word {
        roots.push((prefix.apply(i), prefix.apply(i + 1)));
        prefix = &prefix * &Permutation::simple(n, i)?;
    }
    let mut total = MultiPoly::zero(n);
    let mut chosen = Vec::new();
    search(n, word, &roots, 0, v.clone(), &mut chosen, &mut total);
    Ok(total)
}

fn search(
    n: usize,
    word: &[usize],
    roots: &[(usize, usize)],
    j: usize,
    rem: Permutation,
    chosen: &mut Vec<LinForm>,
    total: &mut MultiPoly,
) {
    let need = rem.length();
    if need == 0 {
        total.add_assign(&MultiPoly::product_of(n, chosen));
        return;
    }
    if word.len() - j < need {
        return;
    }
    let i = word[j];
    if rem.is_left_descent(i) {
        let next = &Permutation::simple(n, i).expect("letter is in range") * &rem;
        chosen.push(LinForm::root(n, roots[j].0, roots[j].1));
        search(n, word, roots, j + 1, next, chosen, total);
        chosen.pop();
    }
    search(n, word, roots, j + 1, rem, chosen, total);
}

/// `p_v(w)`: the restriction projected along `t_i -> c_i t`.
pub fn springer_schubert(v: &Permutation, w: &Permutation, weights: &WeightAssignment) -> Result<UniPoly> {
    project_s1(&schubert_restrict(v, w)?, weights.weights())
}
