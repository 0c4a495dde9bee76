//! Bipartite perfect matching on `n × n` support patterns (augmenting paths).

/// Finds a permutation `p` with `(i, p[i])` in `positions` for every row `i`,
/// or `None` if the positions admit no perfect matching.
pub fn perfect_matching(n: usize, positions: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(r, c) in positions {
        debug_assert!(r < n && c < n);
        adj[r].push(c);
    }
    let mut col_owner: Vec<Option<usize>> = vec![None; n];
    for row in 0..n {
        let mut seen = vec![false; n];
        if !augment(row, &adj, &mut seen, &mut col_owner) {
            return None;
        }
    }
    let mut perm = vec![0; n];
    for (col, owner) in col_owner.iter().enumerate() {
        perm[owner.expect("perfect matching covers every column")] = col;
    }
    Some(perm)
}

fn augment(
    row: usize,
    adj: &[Vec<usize>],
    seen: &mut [bool],
    col_owner: &mut [Option<usize>],
) -> bool {
    for &col in &adj[row] {
        if seen[col] {
            continue;
        }
        seen[col] = true;
        let free = match col_owner[col] {
            None => true,
            Some(other) => augment(other, adj, seen, col_owner),
        };
        if free {
            col_owner[col] = Some(row);
            return true;
        }
    }
    false
}
