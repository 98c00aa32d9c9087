//! Execution strategy for bulk scans.
//!
//! Everything combinatorial in this crate — axiom validation over pair
//! grids, separation checks over point pairs, exhaustive family enumeration,
//! randomized oracle trials — reduces to "evaluate a pure function over
//! `0..len` and either keep the results or find the first hit". These
//! helpers centralise that shape so the rest of the crate can stay oblivious
//! to threading.
//!
//! With the `parallel` feature (on by default) large scans run on rayon;
//! small ones stay sequential because the fork/join overhead dwarfs them.
//! Both paths are always compiled and exposed so the benchmark suite can
//! compare them, and both return the **first** hit in index order, so
//! witnesses are identical no matter how a scan executes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Scans below this length run sequentially even when `parallel` is enabled.
#[cfg(feature = "parallel")]
const PARALLEL_CUTOFF: usize = 4096;

/// First `Some` produced by `f` over `0..len`, in index order.
///
/// Dispatches between the sequential and parallel paths by scan length.
pub fn scan_first<T, F>(len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= PARALLEL_CUTOFF {
        return scan_first_par(len, f);
    }
    scan_first_seq(len, f)
}

/// Sequential implementation of [`scan_first`].
pub fn scan_first_seq<T, F>(len: usize, f: F) -> Option<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..len).find_map(f)
}

/// Parallel implementation of [`scan_first`].
///
/// `find_map_first` keeps rayon's result selection anchored to the lowest
/// index, which is what makes parallel witnesses match sequential ones.
#[cfg(feature = "parallel")]
pub fn scan_first_par<T, F>(len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..len).into_par_iter().find_map_first(f)
}

/// Applies `f` over `0..len` and collects the `Some` results in index order.
pub fn filter_map_collect<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= PARALLEL_CUTOFF {
        return filter_map_collect_par(len, f);
    }
    filter_map_collect_seq(len, f)
}

/// Sequential implementation of [`filter_map_collect`].
pub fn filter_map_collect_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..len).filter_map(f).collect()
}

/// Parallel implementation of [`filter_map_collect`]; rayon's indexed
/// collect preserves index order.
#[cfg(feature = "parallel")]
pub fn filter_map_collect_par<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..len).into_par_iter().filter_map(f).collect()
}

/// Number of indices in `0..len` satisfying `f`.
pub fn count_matching<F>(len: usize, f: F) -> u64
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= PARALLEL_CUTOFF {
        return (0..len).into_par_iter().filter(|&i| f(i)).count() as u64;
    }
    (0..len).filter(|&i| f(i)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_hit_is_lowest_index() {
        let hit = |i: usize| if i % 1000 == 999 { Some(i) } else { None };
        assert_eq!(scan_first(100_000, hit), Some(999));
        assert_eq!(scan_first_seq(100_000, hit), Some(999));
        #[cfg(feature = "parallel")]
        assert_eq!(scan_first_par(100_000, hit), Some(999));
        assert_eq!(scan_first(500, |_| None::<usize>), None);
    }

    #[test]
    fn collect_preserves_index_order() {
        let f = |i: usize| if i % 3 == 0 { Some(i) } else { None };
        let seq = filter_map_collect_seq(10_000, f);
        assert_eq!(filter_map_collect(10_000, f), seq);
        #[cfg(feature = "parallel")]
        assert_eq!(filter_map_collect_par(10_000, f), seq);
    }

    #[test]
    fn counts_match() {
        assert_eq!(count_matching(10_000, |i| i % 7 == 0), 1429);
    }
}
