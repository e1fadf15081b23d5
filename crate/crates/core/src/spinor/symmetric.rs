//! Symmetric-group combinatorics: partitions, cycle types and irreducible
//! characters by the Murnaghan–Nakayama rule.

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle lengths of a permutation of `0..n`, in decreasing order.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `χ_λ(μ)`: value of the irreducible character `λ` on cycle type `μ`.
pub fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    assert_eq!(lambda.iter().sum::<usize>(), mu.iter().sum::<usize>(), "sizes differ");
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    mn(&beta, mu)
}

/// Murnaghan–Nakayama on a β-set: removing a rim hook of length `h` moves a
/// bead from `b` to `b - h`, with sign `(-1)^{beads passed}`.
fn mn(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&h, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let passed = beta.iter().filter(|&&c| c > b - h && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - h;
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}

/// Dimension `χ_λ(1)` of the irreducible representation `λ`.
pub fn irrep_dim(lambda: &[usize]) -> i64 {
    let n: usize = lambda.iter().sum();
    character(lambda, &vec![1; n])
}

/// All permutations of `0..k` (as images `p[i]`), each with a word in the
/// adjacent transpositions `s_c = (c, c+1)` such that `p = s_{w_1} ∘ … ∘ s_{w_l}`.
pub fn permutations_with_words(k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    use std::collections::{HashSet, VecDeque};
    let id: Vec<usize> = (0..k).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([(id, Vec::new())]);
    let mut out = Vec::new();
    while let Some((p, word)) = queue.pop_front() {
        for c in 0..k.saturating_sub(1) {
            // p ∘ s_c
            let mut q = p.clone();
            q.swap(c, c + 1);
            if seen.insert(q.clone()) {
                let mut w = word.clone();
                w.push(c);
                queue.push_back((q, w));
            }
        }
        out.push((p, word));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn s3_table() {
        // rows: trivial, standard, sign; columns: 1^3, 2 1, 3
        let classes = [vec![1, 1, 1], vec![2, 1], vec![3]];
        let table: Vec<Vec<i64>> = partitions(3)
            .iter()
            .map(|l| classes.iter().map(|c| character(l, c)).collect())
            .collect();
        assert_eq!(table, vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]]);
    }

    #[test]
    fn column_orthogonality() {
        // Σ_λ χ_λ(1)^2 = n!, Σ_λ χ_λ(1)χ_λ(μ) = 0 for μ ≠ 1
        for n in 1..=6usize {
            let fact: i64 = (1..=n as i64).product();
            let ps = partitions(n);
            assert_eq!(ps.iter().map(|l| irrep_dim(l).pow(2)).sum::<i64>(), fact);
            for mu in &ps {
                if mu.iter().all(|&p| p == 1) {
                    continue;
                }
                assert_eq!(ps.iter().map(|l| irrep_dim(l) * character(l, mu)).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn words_generate() {
        let perms = permutations_with_words(4);
        assert_eq!(perms.len(), 24);
        for (p, w) in perms {
            let mut q: Vec<usize> = (0..4).collect();
            for &c in &w {
                q.swap(c, c + 1);
            }
            assert_eq!(q, p);
        }
        assert_eq!(cycle_type(&[1, 2, 0, 3]), vec![3, 1]);
    }
}
