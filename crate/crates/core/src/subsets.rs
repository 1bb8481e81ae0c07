//! Small subset enumerators shared by the constructors and the oracles.

/// Calls `f` with every `k`-subset of `items`, in lexicographic index order.
pub(crate) fn for_each_combination(items: &[usize], k: usize, mut f: impl FnMut(&[usize])) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (slot, &i) in buf.iter_mut().zip(&idx) {
            *slot = items[i];
        }
        f(&buf);
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_combination(items, k, |c| out.push(c.to_vec()));
    out
}

/// All ordered partitions of `items` into `blocks` non-empty blocks, as block-index
/// assignments (one entry per item).
pub(crate) fn surjections(len: usize, blocks: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if blocks == 0 || len < blocks {
        return out;
    }
    let mut assign = vec![0usize; len];
    loop {
        let mut seen = vec![false; blocks];
        for &b in &assign {
            seen[b] = true;
        }
        if seen.iter().all(|&s| s) {
            out.push(assign.clone());
        }
        let mut pos = 0;
        loop {
            if pos == len {
                return out;
            }
            assign[pos] += 1;
            if assign[pos] < blocks {
                break;
            }
            assign[pos] = 0;
            pos += 1;
        }
    }
}
