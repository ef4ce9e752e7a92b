//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::ops::{Add, Div, Mul, Neg, Sub};

use ramsey_regular::MultiGraph;

/// Double-double number `hi + lo`, about 32 significant digits.
#[derive(Clone, Copy, Debug)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl Dd {
    pub const fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub const LN2: Dd = Dd {
        hi: core::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn recip(self) -> Dd {
        Dd::new(1.0) / self
    }

    pub fn exp(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::new(1.0);
        }
        let k = (self.hi / core::f64::consts::LN_2).round();
        let reduced = self - Dd::LN2 * Dd::new(k);
        // exp(r) = exp(r / 2^10)^(2^10)
        let scale = 1024.0;
        let r = Dd {
            hi: reduced.hi / scale,
            lo: reduced.lo / scale,
        };
        let mut term = Dd::new(1.0);
        let mut sum = Dd::new(1.0);
        for i in 1..30 {
            term = term * r / Dd::new(i as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            sum = sum * sum;
        }
        let p = 2f64.powi(k as i32);
        Dd {
            hi: sum.hi * p,
            lo: sum.lo * p,
        }
    }

    /// Newton iteration on `exp(y) = x`.
    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "ln of a non-positive number");
        let mut y = Dd::new(self.hi.ln());
        for _ in 0..3 {
            y = y + self * (-y).exp() - Dd::new(1.0);
        }
        y
    }

    pub fn sqrt(self) -> Dd {
        let y = Dd::new(self.hi.sqrt());
        y + (self - y * y) / (Dd::new(2.0) * y)
    }

    pub fn powd(self, e: Dd) -> Dd {
        (e * self.ln()).exp()
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::new(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

/// `((1/3) c^c / (e^(1+c) d^c))^(1/(c-1))`, evaluated term by term.
pub fn delta_reference(d: f64, c: f64) -> f64 {
    let (d, c) = (Dd::new(d), Dd::new(c));
    let one = Dd::new(1.0);
    let base = c.powd(c) / (Dd::new(3.0) * (one + c).exp() * d.powd(c));
    base.powd((c - one).recip()).to_f64()
}

pub fn cycle_bound_reference(c1: f64, c2: f64, k: f64) -> f64 {
    let one = Dd::new(1.0);
    ((Dd::new(k) / Dd::new(2.0) - one) * ((Dd::new(c1) / Dd::new(c2)).sqrt() - one)).to_f64()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Longest cycle by trying every ordered vertex sequence that starts at its
/// smallest vertex. Loops are 1-cycles and parallel pairs 2-cycles.
pub fn longest_cycle_brute(g: &MultiGraph) -> usize {
    let n = g.n();
    let mut mult = vec![vec![0usize; n]; n];
    let mut best = 0;
    for &(u, v) in g.edges() {
        if u == v {
            best = best.max(1);
        } else {
            mult[u][v] += 1;
            mult[v][u] += 1;
            if mult[u][v] >= 2 {
                best = best.max(2);
            }
        }
    }
    fn walk(mult: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool], best: &mut usize) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 3 && mult[last][start] > 0 {
            *best = (*best).max(path.len());
        }
        for w in start + 1..mult.len() {
            if !used[w] && mult[last][w] > 0 {
                used[w] = true;
                path.push(w);
                walk(mult, path, used, best);
                path.pop();
                used[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        walk(&mult, &mut vec![s], &mut used, &mut best);
    }
    best
}

/// Densest nonempty vertex subset over all `2^n - 1` subsets, as exact
/// `(edges, size)`; ties keep the first subset in mask order.
pub fn densest_subset_brute(g: &MultiGraph, smax: usize) -> (u64, usize) {
    let n = g.n();
    assert!(n <= 20);
    let mut best = (0u64, 0usize);
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > smax {
            continue;
        }
        let e = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count() as u64;
        if best.1 == 0 || e * best.1 as u64 > best.0 * size as u64 {
            best = (e, size);
        }
    }
    best
}

pub fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact rational `num / den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio(pub u128, pub u128);

impl Ratio {
    pub fn new(num: u128, den: u128) -> Self {
        let g = gcd(num, den).max(1);
        Ratio(num / g, den / g)
    }

    pub fn add(self, o: Ratio) -> Ratio {
        Ratio::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / self.1 as f64
    }
}

/// Number of directed cycles of a functional graph given by `succ`.
pub fn count_cycles(succ: &[usize]) -> usize {
    let n = succ.len();
    let mut state = vec![0u8; n];
    let mut cycles = 0;
    for s in 0..n {
        let mut v = s;
        let mut walk = Vec::new();
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = succ[v];
        }
        if state[v] == 1 {
            cycles += 1;
        }
        for u in walk {
            state[u] = 2;
        }
    }
    cycles
}

/// Random small multigraph mixing the three models with arbitrary edge
/// sprinkles; `choice` picks the family.
pub fn small_graph(choice: u8, n: usize, seed: u64) -> MultiGraph {
    use ramsey_regular::generators::{hamilton_sum, kout_sum, pairing_model, Seed};
    use rand::{Rng, SeedableRng};
    let seed_s = Seed(seed);
    match choice % 4 {
        0 => {
            let d = if n.is_multiple_of(2) { 3 } else { 4 };
            pairing_model(n, d, seed_s).unwrap()
        }
        1 => hamilton_sum(n.max(3), 2, seed_s).unwrap().0,
        2 => kout_sum(n.max(2), 2, seed_s).unwrap().0,
        _ => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = rng.random_range(0..=2 * n);
            let edges = (0..m)
                .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
                .collect();
            MultiGraph::new(n, edges).unwrap()
        }
    }
}
