//! Semistandard tableaux: enumeration, counting, and the charge statistic.
//!
//! The charge of a word with partition content is computed by the standard
//! subword decomposition: the reading word of a tableau is obtained by
//! reading each row right to left, rows top to bottom.  A standard subword is
//! extracted by scanning the word cyclically right to left, picking the first
//! 1, then the first 2 after it, and so on; its charge adds 1 to the running
//! index each time a letter sits to the left of its predecessor.  The total
//! charge is the sum over extracted subwords.

use crate::partition::Partition;
use std::collections::HashMap;

/// A semistandard tableau stored as rows of letters (1-based values).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Reading word: rows top to bottom, each row right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for row in &self.rows {
            w.extend(row.iter().rev().copied());
        }
        w
    }
}

/// Enumerates all semistandard tableaux of shape `lambda` and content `mu`
/// (entry `i+1` appears `mu[i]` times).  Rows weakly increase, columns
/// strictly increase.
pub fn ssyt_enumerate(lambda: &Partition, content: &[u32]) -> Vec<Tableau> {
    let total: u32 = content.iter().sum();
    if lambda.size() != total {
        return Vec::new();
    }
    if lambda.is_empty() {
        return vec![Tableau { rows: Vec::new() }];
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let nletters = content.len();
    let mut remaining: Vec<u32> = content.to_vec();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();

    // Fill cells in row-major order; cell (r, c) needs a letter >= left
    // neighbour and > the one above.
    fn rec(
        shape: &[usize],
        r: usize,
        c: usize,
        nletters: usize,
        remaining: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if r == shape.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_above = if r > 0 && shape[r - 1] > c { rows[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        for v in lo..=(nletters as u32) {
            let idx = (v - 1) as usize;
            if remaining[idx] == 0 {
                continue;
            }
            remaining[idx] -= 1;
            rows[r][c] = v;
            rec(shape, nr, nc, nletters, remaining, rows, out);
            remaining[idx] += 1;
        }
    }
    rec(&shape, 0, 0, nletters, &mut remaining, &mut rows, &mut out);
    out
}

/// Kostka number: semistandard tableaux of shape `lambda`, content `nu`
/// (a composition; zeros allowed).  Invariant under permuting `nu`.
pub fn ssyt_count(lambda: &Partition, nu: &[u32]) -> u64 {
    let total: u32 = nu.iter().sum();
    if lambda.size() != total {
        return 0;
    }
    // Horizontal-strip DP: add letters one at a time; a letter's cells form a
    // horizontal strip between consecutive shapes.
    let mut cache: HashMap<(Vec<u32>, usize), u64> = HashMap::new();
    fn strips_into(
        target: &[u32],
        shape: &[u32],
        size: u32,
        row: usize,
        upper_bound: u32,
        acc: &mut Vec<u32>,
        results: &mut Vec<Vec<u32>>,
    ) {
        // Extend `shape` by a horizontal strip of `size` cells inside `target`,
        // choosing the new length of `row` and deeper rows.
        if row == target.len() {
            if size == 0 {
                let mut s = acc.clone();
                while s.last() == Some(&0) {
                    s.pop();
                }
                results.push(s);
            }
            return;
        }
        let old = if row < shape.len() { shape[row] } else { 0 };
        // new length of this row: between old and min(target, strip budget,
        // previous OLD row length for the strip condition)
        let prev_old = if row == 0 {
            u32::MAX
        } else if row - 1 < shape.len() {
            shape[row - 1]
        } else {
            0
        };
        let hi = target[row].min(old + size).min(prev_old.max(old)).min(upper_bound);
        for new_len in old..=hi {
            // rows of a partition must stay weakly decreasing
            acc.push(new_len);
            strips_into(target, shape, size - (new_len - old), row + 1, new_len, acc, results);
            acc.pop();
        }
    }
    fn count(
        lambda: &[u32],
        nu: &[u32],
        letter: usize,
        shape: Vec<u32>,
        cache: &mut HashMap<(Vec<u32>, usize), u64>,
    ) -> u64 {
        if letter == nu.len() {
            return if shape == lambda { 1 } else { 0 };
        }
        if let Some(&v) = cache.get(&(shape.clone(), letter)) {
            return v;
        }
        let mut total = 0u64;
        let mut results = Vec::new();
        let mut acc = Vec::new();
        strips_into(lambda, &shape, nu[letter], 0, u32::MAX, &mut acc, &mut results);
        for next in results {
            total += count(lambda, nu, letter + 1, next, cache);
        }
        cache.insert((shape, letter), total);
        total
    }
    count(lambda.parts(), nu, 0, Vec::new(), &mut cache)
}

/// Charge of a word whose content is a partition.
pub fn charge_of_word(word: &[u32]) -> u64 {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let max_letter = *word.iter().max().unwrap();
    let mut used = vec![false; n];
    let mut left = n;
    let mut total = 0u64;
    while left > 0 {
        // Extract one standard subword: anchor at the rightmost 1, then find
        // each next letter scanning rightward cyclically.
        let largest = (1..=max_letter)
            .rev()
            .find(|&v| word.iter().zip(&used).any(|(&w, &u)| !u && w == v))
            .unwrap();
        let mut positions = Vec::with_capacity(largest as usize);
        let mut pos = word
            .iter()
            .zip(&used)
            .enumerate()
            .rev()
            .find(|(_, (&w, &u))| !u && w == 1)
            .map(|(i, _)| i)
            .expect("content is not a partition: no 1 left");
        used[pos] = true;
        positions.push(pos);
        left -= 1;
        for letter in 2..=largest {
            let mut steps = 0;
            loop {
                pos = if pos + 1 == n { 0 } else { pos + 1 };
                steps += 1;
                assert!(steps <= n, "content is not a partition: letter {letter} missing");
                if !used[pos] && word[pos] == letter {
                    break;
                }
            }
            used[pos] = true;
            positions.push(pos);
            left -= 1;
        }
        // Charge of the standard subword: the index rises by one whenever the
        // next letter sits to the left of its predecessor.
        let mut index = 0u64;
        for w in positions.windows(2) {
            if w[1] < w[0] {
                index += 1;
            }
            total += index;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reading_word_is_right_to_left_top_to_bottom() {
        let t = Tableau { rows: vec![vec![1, 1, 2], vec![3]] };
        assert_eq!(t.reading_word(), vec![2, 1, 1, 3]);
    }

    #[test]
    fn enumerate_standard_shape_21() {
        let ts = ssyt_enumerate(&p(&[2, 1]), &[1, 1, 1]);
        assert_eq!(ts.len(), 2);
    }

    #[test]
    fn enumerate_respects_column_strictness() {
        assert!(ssyt_enumerate(&p(&[1, 1]), &[2]).is_empty());
        assert_eq!(ssyt_enumerate(&p(&[2, 2]), &[2, 1, 1]).len(), 1);
    }

    #[test]
    fn ssyt_count_examples() {
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(ssyt_count(&p(&[3, 2]), &[3, 2]), 1);
        assert_eq!(ssyt_count(&p(&[1, 1]), &[2, 0]), 0);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 2]), 1);
        assert_eq!(ssyt_count(&p(&[2, 2]), &[1, 1, 1, 1]), 2);
        assert_eq!(ssyt_count(&p(&[3, 2, 1]), &[1, 1, 1, 1, 1, 1]), 16);
    }

    #[test]
    fn ssyt_count_matches_enumeration() {
        for n in 1..=6u32 {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    let dp = ssyt_count(&lambda, mu.parts());
                    let en = ssyt_enumerate(&lambda, mu.parts()).len() as u64;
                    assert_eq!(dp, en, "lambda={lambda} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn ssyt_count_content_permutation_invariant() {
        let lam = p(&[3, 2, 1]);
        assert_eq!(ssyt_count(&lam, &[2, 2, 1, 1]), ssyt_count(&lam, &[1, 2, 1, 2]));
        assert_eq!(ssyt_count(&lam, &[2, 2, 1, 1]), ssyt_count(&lam, &[1, 1, 2, 2]));
        let lam2 = p(&[2, 2]);
        assert_eq!(ssyt_count(&lam2, &[2, 1, 1]), ssyt_count(&lam2, &[1, 2, 1]));
    }

    #[test]
    fn charge_standard_words() {
        assert_eq!(charge_of_word(&[3, 1, 2]), 1);
        assert_eq!(charge_of_word(&[2, 1, 3]), 2);
        assert_eq!(charge_of_word(&[1, 2]), 0);
        assert_eq!(charge_of_word(&[2, 1]), 1);
        assert_eq!(charge_of_word(&[]), 0);
    }

    #[test]
    fn charge_repeated_content() {
        // unique tableau of shape = content has charge zero
        let t = Tableau { rows: vec![vec![1, 1], vec![2]] };
        assert_eq!(charge_of_word(&t.reading_word()), 0);
        // [[1,1,2],[3]] has word 2,1,1,3 and charge 2
        assert_eq!(charge_of_word(&[2, 1, 1, 3]), 2);
        // [[1,1,3],[2]] has word 3,1,1,2 and charge 1
        assert_eq!(charge_of_word(&[3, 1, 1, 2]), 1);
    }
}
