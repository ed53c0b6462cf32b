//! Lexicographically ordered monomial bases of exterior and symmetric powers.

use std::collections::HashMap;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `n`-tuples from `[0, q)`, lexicographic.
pub fn combinations(q: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(q, n));
    let mut cur = Vec::with_capacity(n);
    fn rec(start: usize, q: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..q {
            if q - i < n - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, q, n, cur, out);
            cur.pop();
        }
    }
    rec(0, q, n, &mut cur, &mut out);
    out
}

/// Non-decreasing `m`-tuples from `[0, k)`, lexicographic.
pub fn multisets(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, k: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i, k, m, cur, out);
            cur.pop();
        }
    }
    rec(0, k, m, &mut cur, &mut out);
    out
}

/// An ordered list of index tuples together with its reverse lookup.
#[derive(Clone, Debug)]
pub struct Basis {
    items: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Basis {
    pub fn exterior(q: usize, n: usize) -> Self {
        Self::from_items(combinations(q, n))
    }

    pub fn symmetric(k: usize, m: usize) -> Self {
        Self::from_items(multisets(k, m))
    }

    fn from_items(items: Vec<Vec<usize>>) -> Self {
        let index = items.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Basis { items, index }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.items[i]
    }

    pub fn position(&self, key: &[usize]) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.items.iter().map(Vec::as_slice)
    }
}

/// Sorts an index word, returning `None` on a repeated index and otherwise
/// the sorted word with the parity of the sorting permutation (`true` = odd).
pub fn sort_with_sign(word: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut w = word.to_vec();
    let mut odd = false;
    // insertion sort; words are short
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && w[j - 1] == w[j] {
            return None;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, odd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        for q in 0..8 {
            for n in 0..=q + 1 {
                assert_eq!(combinations(q, n).len(), binomial(q, n));
            }
        }
        for k in 1..6 {
            for m in 0..5 {
                assert_eq!(multisets(k, m).len(), binomial(k + m - 1, m));
            }
        }
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn sign_of_sort() {
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sort_with_sign(&[0, 2, 0]), None);
        assert_eq!(sort_with_sign(&[]), Some((vec![], false)));
    }
}
