//! Lexicographic k-subset enumeration with early exit.

/// Visits the k-element subsets of `pool` (kept in pool order) in
/// lexicographic order and returns the first non-None payload.
pub(crate) fn first_combination<T>(
    pool: &[usize],
    k: usize,
    mut f: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    fn rec<T>(
        pool: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        if chosen.len() == k {
            return f(chosen);
        }
        let need = k - chosen.len();
        for i in start..=pool.len().saturating_sub(need) {
            chosen.push(pool[i]);
            if let Some(hit) = rec(pool, k, i + 1, chosen, f) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    if k > pool.len() {
        return None;
    }
    rec(pool, k, 0, &mut Vec::with_capacity(k), &mut f)
}
