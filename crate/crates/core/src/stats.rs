//! Streaming mean/variance accumulation (Welford), with an exact merge so
//! per-block accumulators can be combined in a fixed order. Folding the same
//! blocks in the same order always yields bit-identical results, which is
//! what makes serial and parallel estimates interchangeable.

/// Welford online mean/variance accumulator.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Welford {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Welford {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Combine two accumulators (Chan's parallel update). Not commutative in
    /// floating point: always fold in a fixed order.
    pub fn merge(self, other: Self) -> Self {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 {
            return other;
        }
        let n1 = self.count as f64;
        let n2 = other.count as f64;
        let count = self.count + other.count;
        let n = n1 + n2;
        let delta = other.mean - self.mean;
        Self {
            count,
            mean: self.mean + delta * (n2 / n),
            m2: self.m2 + other.m2 + delta * delta * (n1 * n2 / n),
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance; 0 for fewer than two samples.
    pub fn sample_variance(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        self.m2 / (self.count - 1) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn matches_two_pass_computation() {
        let data = [5.0, 10.0, 12.0, 15.0, 20.0];
        let mut w = Welford::new();
        for &x in &data {
            w.push(x);
        }
        let mean = data.iter().sum::<f64>() / data.len() as f64;
        let var = data.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>()
            / (data.len() - 1) as f64;
        assert!((w.mean() - mean).abs() < 1e-12);
        assert!((w.sample_variance() - var).abs() < 1e-12);
    }

    #[test]
    fn merge_equals_sequential_push_statistically() {
        let data: Vec<f64> = (0..1000).map(|i| ((i * 37) % 101) as f64 * 0.25).collect();
        let mut all = Welford::new();
        for &x in &data {
            all.push(x);
        }
        let (left, right) = data.split_at(357);
        let mut a = Welford::new();
        let mut b = Welford::new();
        left.iter().for_each(|&x| a.push(x));
        right.iter().for_each(|&x| b.push(x));
        let merged = a.merge(b);
        assert_eq!(merged.count(), all.count());
        assert!((merged.mean() - all.mean()).abs() < 1e-10);
        assert!((merged.sample_variance() - all.sample_variance()).abs() < 1e-9);
    }

    #[test]
    fn merge_with_empty_is_identity() {
        let mut w = Welford::new();
        w.push(3.5);
        w.push(-1.0);
        assert_eq!(w.merge(Welford::new()), w);
        assert_eq!(Welford::new().merge(w), w);
    }

    #[test]
    fn stable_for_large_offsets() {
        let mut w = Welford::new();
        for x in [1e9 + 1.0, 1e9 + 2.0, 1e9 + 3.0] {
            w.push(x);
        }
        assert!((w.sample_variance() - 1.0).abs() < 1e-10);
    }
}
