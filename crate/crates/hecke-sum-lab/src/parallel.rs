//! Deterministic parallel primitives.
//!
//! Every reduction in this crate must produce bit-identical results for any
//! worker count. The scheme is fixed: split the index range into chunks of
//! `REDUCE_CHUNK`, sum each chunk sequentially with compensated summation,
//! then fold the chunk partials in ascending chunk order. Only the chunk
//! boundaries enter the floating-point dependence, never the worker count.

/// Chunk size for ordered floating-point reductions.
pub const REDUCE_CHUNK: u64 = 1 << 16;

/// Block size for segmented sieve construction.
pub const SIEVE_BLOCK: usize = 1 << 20;

/// Compensated (Kahan) accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Kahan { sum: 0.0, c: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let y = v - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Number of worker threads to use for a requested count (0 = auto).
pub fn effective_workers(requested: usize) -> usize {
    if requested > 0 {
        requested
    } else {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    }
}

/// Deterministic parallel sum of `f(i)` over `lo..hi`.
///
/// The result is independent of `workers`: chunk partials depend only on the
/// fixed chunk grid, and the final fold walks chunks in index order.
pub fn sum_indexed<F>(lo: u64, hi: u64, workers: usize, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    if hi <= lo {
        return 0.0;
    }
    let n_chunks = ((hi - lo) + REDUCE_CHUNK - 1) / REDUCE_CHUNK;
    let mut partials = vec![0.0f64; n_chunks as usize];
    let workers = effective_workers(workers).min(n_chunks as usize).max(1);

    // Contiguous chunk ranges per worker; each worker owns a disjoint slice
    // of the partials vector.
    let per = (n_chunks as usize + workers - 1) / workers;
    std::thread::scope(|scope| {
        for (w, slot) in partials.chunks_mut(per).enumerate() {
            let f = &f;
            scope.spawn(move || {
                let first_chunk = (w * per) as u64;
                for (j, out) in slot.iter_mut().enumerate() {
                    let c = first_chunk + j as u64;
                    let start = lo + c * REDUCE_CHUNK;
                    let end = (start + REDUCE_CHUNK).min(hi);
                    let mut acc = Kahan::new();
                    for i in start..end {
                        acc.add(f(i));
                    }
                    *out = acc.value();
                }
            });
        }
    });

    let mut total = Kahan::new();
    for p in partials {
        total.add(p);
    }
    total.value()
}

/// Deterministic parallel sum of a pair of series in one pass:
/// `f(i) = (s_term, l_term)`. Same chunk scheme as [`sum_indexed`].
pub fn sum_pair_indexed<F>(lo: u64, hi: u64, workers: usize, f: F) -> (f64, f64)
where
    F: Fn(u64) -> (f64, f64) + Sync,
{
    if hi <= lo {
        return (0.0, 0.0);
    }
    let n_chunks = ((hi - lo) + REDUCE_CHUNK - 1) / REDUCE_CHUNK;
    let mut partials = vec![(0.0f64, 0.0f64); n_chunks as usize];
    let workers = effective_workers(workers).min(n_chunks as usize).max(1);
    let per = (n_chunks as usize + workers - 1) / workers;

    std::thread::scope(|scope| {
        for (w, slot) in partials.chunks_mut(per).enumerate() {
            let f = &f;
            scope.spawn(move || {
                let first_chunk = (w * per) as u64;
                for (j, out) in slot.iter_mut().enumerate() {
                    let c = first_chunk + j as u64;
                    let start = lo + c * REDUCE_CHUNK;
                    let end = (start + REDUCE_CHUNK).min(hi);
                    let mut a = Kahan::new();
                    let mut b = Kahan::new();
                    for i in start..end {
                        let (s, l) = f(i);
                        a.add(s);
                        b.add(l);
                    }
                    *out = (a.value(), b.value());
                }
            });
        }
    });

    let mut a = Kahan::new();
    let mut b = Kahan::new();
    for (s, l) in partials {
        a.add(s);
        b.add(l);
    }
    (a.value(), b.value())
}

/// Run `f(block_index, global_start, slice)` over fixed-size blocks of `data`
/// in parallel. Blocks are disjoint, so the final content never depends on
/// scheduling.
pub fn for_blocks<T, F>(data: &mut [T], block: usize, workers: usize, f: F)
where
    T: Send,
    F: Fn(usize, usize, &mut [T]) + Sync,
{
    let n_blocks = (data.len() + block - 1) / block;
    if n_blocks == 0 {
        return;
    }
    let workers = effective_workers(workers).min(n_blocks).max(1);
    let per = (n_blocks + workers - 1) / workers;

    std::thread::scope(|scope| {
        for (w, region) in data.chunks_mut(per * block).enumerate() {
            let f = &f;
            scope.spawn(move || {
                let mut start = w * per * block;
                let mut idx = w * per;
                for sub in region.chunks_mut(block) {
                    f(idx, start, sub);
                    start += sub.len();
                    idx += 1;
                }
            });
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_beats_naive_on_ill_conditioned_input() {
        let mut k = Kahan::new();
        k.add(1.0);
        for _ in 0..10_000_000 {
            k.add(1e-16);
        }
        let err = (k.value() - (1.0 + 1e-9)).abs();
        assert!(err < 1e-15, "kahan error {err}");
    }

    #[test]
    fn sum_is_worker_count_invariant() {
        let f = |i: u64| 1.0 / (i as f64 + 1.0).sqrt();
        let s1 = sum_indexed(0, 1_000_000, 1, f);
        for w in [2, 3, 7, 16] {
            let sw = sum_indexed(0, 1_000_000, w, f);
            assert_eq!(s1.to_bits(), sw.to_bits(), "workers={w}");
        }
    }

    #[test]
    fn blocks_cover_everything_once() {
        let mut data = vec![0u32; 3 * SIEVE_BLOCK + 12345];
        for_blocks(&mut data, SIEVE_BLOCK, 4, |_, start, slice| {
            for (i, v) in slice.iter_mut().enumerate() {
                *v += (start + i) as u32;
            }
        });
        for (i, v) in data.iter().enumerate() {
            assert_eq!(*v, i as u32);
        }
    }
}
