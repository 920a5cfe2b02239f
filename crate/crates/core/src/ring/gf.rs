//! Prime fields and their extensions, realized as GF(p)[t] / (f) for the
//! least monic irreducible `f` of the requested degree.
//!
//! Polynomials are coefficient vectors, constant term first. An element of
//! GF(p^k) with coefficients `c_0 .. c_{k-1}` has id `sum c_i * p^i`, so the
//! class of `t` is id `p` (for `k > 1`).

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `q = p^k` for a prime `p`, returns `(p, k)`.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    let ps = prime_factors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

fn trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: usize, p: usize) -> usize {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero residue mod a prime is invertible")
}

/// Remainder of `a` modulo `b` over GF(p); `b` must be nonzero.
pub fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().expect("divisor is nonzero"), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `code`.
fn monic_from_code(mut code: usize, deg: usize, p: usize) -> Vec<usize> {
    let mut f = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        f.push(code % p);
        code /= p;
    }
    f.push(1);
    f
}

pub fn is_irreducible(f: &[usize], p: usize) -> bool {
    let f = trim(f.to_vec());
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let g = monic_from_code(code, d, p);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    deg >= 1
}

/// Least monic irreducible polynomial of degree `k` over GF(p), ordered by
/// its lower coefficients read as a base-`p` number (highest degree most
/// significant). Returned in full, leading 1 included.
pub fn least_irreducible(p: usize, k: usize) -> Vec<usize> {
    (0..p.pow(k as u32))
        .map(|code| monic_from_code(code, k, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Arithmetic in GF(p^k) on coefficient vectors of length `k`.
#[derive(Clone, Debug)]
pub struct GfArith {
    pub p: usize,
    pub k: usize,
    /// Full monic modulus, constant term first.
    pub modulus: Vec<usize>,
}

impl GfArith {
    pub fn new(p: usize, k: usize) -> Self {
        GfArith { p, k, modulus: least_irreducible(p, k) }
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.k as u32)
    }

    pub fn decode(&self, mut id: usize) -> Vec<usize> {
        (0..self.k)
            .map(|_| {
                let c = id % self.p;
                id /= self.p;
                c
            })
            .collect()
    }

    pub fn encode(&self, coeffs: &[usize]) -> usize {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&s)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0; 2 * self.k];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.k, 0);
        self.encode(&r)
    }

    /// Polynomial label in the generator `t`, e.g. `t^2+t+1`.
    pub fn label(&self, id: usize) -> String {
        if self.k == 1 {
            return id.to_string();
        }
        let coeffs = self.decode(id);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(deg, &c)| {
                let var = match deg {
                    0 => String::new(),
                    1 => "t".to_string(),
                    d => format!("t^{d}"),
                };
                match (c, deg) {
                    (_, 0) => c.to_string(),
                    (1, _) => var,
                    _ => format!("{c}{var}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}
