//! Symmetric tridiagonal eigensolver: Sturm-count bisection for selected
//! low eigenvalues, inverse iteration for the matching vectors. Self
//! contained so the verification path shares no numerics with the closed
//! form it is checking.

pub(crate) struct SymTridiag {
    diag: Vec<f64>,
    /// One shorter than `diag`; entry i couples rows i and i+1.
    offdiag: Vec<f64>,
}

impl SymTridiag {
    pub(crate) fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Self {
        assert!(!diag.is_empty());
        assert_eq!(offdiag.len() + 1, diag.len());
        SymTridiag { diag, offdiag }
    }

    pub(crate) fn n(&self) -> usize {
        self.diag.len()
    }

    fn inf_norm(&self) -> f64 {
        let n = self.n();
        (0..n)
            .map(|i| {
                let left = if i > 0 {
                    self.offdiag[i - 1].abs()
                } else {
                    0.0
                };
                let right = if i + 1 < n {
                    self.offdiag[i].abs()
                } else {
                    0.0
                };
                self.diag[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// Smallest pivot magnitude treated as nonzero in the Sturm recurrence.
    fn pivmin(&self) -> f64 {
        let b2max = self.offdiag.iter().map(|b| b * b).fold(1.0f64, f64::max);
        f64::MIN_POSITIVE * b2max
    }

    /// Interval guaranteed to contain every eigenvalue, slightly widened so
    /// bisection invariants hold at the endpoints.
    pub(crate) fn gershgorin_bounds(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        let margin = (hi - lo + 1.0) * 1e-10;
        (lo - margin, hi + margin)
    }

    /// Number of eigenvalues strictly below x, by the classic pivoted LDL^T
    /// sign count. Pivots at or below pivmin are flushed to -pivmin, which
    /// keeps the recurrence finite when x lands on an eigenvalue.
    pub(crate) fn count_below(&self, x: f64) -> usize {
        let pivmin = self.pivmin();
        let mut count = 0usize;
        let mut t = self.diag[0] - x;
        if t.abs() <= pivmin {
            t = -pivmin;
        }
        if t < 0.0 {
            count += 1;
        }
        for i in 1..self.n() {
            let b = self.offdiag[i - 1];
            t = self.diag[i] - x - b * b / t;
            if t.abs() <= pivmin {
                t = -pivmin;
            }
            if t < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The k smallest eigenvalues in ascending order, each bisected until
    /// the bracket collapses to floating-point resolution.
    pub(crate) fn lowest_eigenvalues(&self, k: usize) -> Vec<f64> {
        assert!(k <= self.n());
        let (glo, ghi) = self.gershgorin_bounds();
        let mut out = Vec::with_capacity(k);
        let mut floor = glo;
        for j in 0..k {
            let mut lo = floor;
            let mut hi = ghi;
            // The Gershgorin span can dwarf the wanted eigenvalue by
            // hundreds of orders of magnitude, so the budget is sized for
            // the worst span rather than for the 64-bit mantissa alone;
            // the loop always runs until the bracket stops splitting.
            for _ in 0..2200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.count_below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            out.push(0.5 * (lo + hi));
            floor = lo;
        }
        out
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        let n = self.n();
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v += self.offdiag[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v += self.offdiag[i] * x[i + 1];
            }
            out[i] = v;
        }
    }

    /// Eigenvector for an eigenvalue already located by bisection, via
    /// inverse iteration on the shifted matrix. Returns the (possibly
    /// Rayleigh-polished) eigenvalue and a unit 2-norm vector whose largest
    /// component is positive.
    pub(crate) fn eigenpair(&self, approx: f64) -> (f64, Vec<f64>) {
        let n = self.n();
        if n == 1 {
            return (self.diag[0], vec![1.0]);
        }
        let norm_t = self.inf_norm().max(1.0);
        let lu = FactoredShift::new(self, approx, f64::EPSILON * norm_t);
        let mut x = deterministic_start(n);
        normalize(&mut x);
        let mut theta = approx;
        let mut work = vec![0.0; n];
        for _ in 0..4 {
            let mut y = x.clone();
            lu.solve(&mut y);
            let len = l2_norm(&y);
            if !len.is_finite() || len == 0.0 {
                break;
            }
            for v in &mut y {
                *v /= len;
            }
            x = y;
            self.apply(&x, &mut work);
            theta = dot(&x, &work);
            let residual = work
                .iter()
                .zip(&x)
                .map(|(tx, xi)| (tx - theta * xi) * (tx - theta * xi))
                .sum::<f64>()
                .sqrt();
            if residual <= 100.0 * f64::EPSILON * norm_t {
                break;
            }
        }
        // Bisection is already accurate to rounding; only accept the
        // Rayleigh value when it is a small, finite correction.
        let value = if theta.is_finite() && (theta - approx).abs() <= 1e-6 * approx.abs().max(1.0) {
            theta
        } else {
            approx
        };
        let (mut idx, mut max) = (0, 0.0f64);
        for (i, v) in x.iter().enumerate() {
            if v.abs() > max {
                max = v.abs();
                idx = i;
            }
        }
        if x[idx] < 0.0 {
            for v in &mut x {
                *v = -*v;
            }
        }
        (value, x)
    }
}

/// LU factors of T - shift I with partial pivoting. Row swaps introduce a
/// second superdiagonal; zero pivots are nudged by `pert` so the solve
/// stays finite, which is exactly what inverse iteration wants near an
/// eigenvalue.
struct FactoredShift {
    sub: Vec<f64>,
    diag: Vec<f64>,
    up1: Vec<f64>,
    up2: Vec<f64>,
    swapped: Vec<bool>,
    pert: f64,
}

impl FactoredShift {
    fn new(t: &SymTridiag, shift: f64, pert: f64) -> Self {
        let n = t.n();
        let mut sub = t.offdiag.clone();
        let mut diag: Vec<f64> = t.diag.iter().map(|d| d - shift).collect();
        let mut up1 = t.offdiag.clone();
        let mut up2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n - 1];
        for i in 0..n - 1 {
            if diag[i].abs() >= sub[i].abs() {
                if diag[i] == 0.0 {
                    diag[i] = pert;
                }
                let m = sub[i] / diag[i];
                sub[i] = m;
                diag[i + 1] -= m * up1[i];
            } else {
                let m = diag[i] / sub[i];
                diag[i] = sub[i];
                sub[i] = m;
                let old_up = up1[i];
                up1[i] = diag[i + 1];
                diag[i + 1] = old_up - m * diag[i + 1];
                if i + 2 < n {
                    up2[i] = up1[i + 1];
                    up1[i + 1] *= -m;
                }
                swapped[i] = true;
            }
        }
        if diag[n - 1] == 0.0 {
            diag[n - 1] = pert;
        }
        FactoredShift {
            sub,
            diag,
            up1,
            up2,
            swapped,
            pert,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = b.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - self.sub[i] * b[i + 1];
            } else {
                b[i + 1] -= self.sub[i] * b[i];
            }
        }
        let safe = |d: f64| if d == 0.0 { self.pert } else { d };
        b[n - 1] /= safe(self.diag[n - 1]);
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.up1[n - 2] * b[n - 1]) / safe(self.diag[n - 2]);
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.up1[i] * b[i + 1] - self.up2[i] * b[i + 2]) / safe(self.diag[i]);
        }
    }
}

fn deterministic_start(n: usize) -> Vec<f64> {
    let mut s: u64 = 0x9E37_79B9_7F4A_7C15;
    (0..n)
        .map(|_| {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect()
}

fn l2_norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(x: &mut [f64]) {
    let len = l2_norm(x);
    for v in x {
        *v /= len;
    }
}
