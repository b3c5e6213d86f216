//! Systems of distinct representatives via augmenting-path matching.

/// Finds a system of distinct representatives for `sets` (one element per
/// set, all distinct) over ground elements `0..ground`, or `None` when
/// Hall's condition fails. Kuhn's algorithm; deterministic.
pub fn distinct_representatives(sets: &[Vec<usize>], ground: usize) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; ground];

    fn try_augment(
        i: usize,
        sets: &[Vec<usize>],
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &x in &sets[i] {
            if visited[x] {
                continue;
            }
            visited[x] = true;
            if owner[x].is_none()
                || try_augment(owner[x].unwrap(), sets, owner, visited)
            {
                owner[x] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..sets.len() {
        let mut visited = vec![false; ground];
        if !try_augment(i, sets, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut rep = vec![usize::MAX; sets.len()];
    for (x, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            rep[*i] = x;
        }
    }
    Some(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sdr_exists() {
        let sets = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let rep = distinct_representatives(&sets, 3).unwrap();
        let mut sorted = rep.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 3);
        for (i, &r) in rep.iter().enumerate() {
            assert!(sets[i].contains(&r));
        }
    }

    #[test]
    fn sdr_hall_failure() {
        let sets = vec![vec![0, 1], vec![0, 1], vec![0, 1]];
        assert_eq!(distinct_representatives(&sets, 4), None);
    }

    #[test]
    fn sdr_tight() {
        let sets = vec![vec![0], vec![0, 1], vec![0, 1, 2]];
        let rep = distinct_representatives(&sets, 3).unwrap();
        assert_eq!(rep, vec![0, 1, 2]);
    }
}
