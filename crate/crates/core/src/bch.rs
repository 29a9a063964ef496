//! Binary BCH codes: construction, systematic encoding, and bounded-distance
//! decoding via syndromes, Berlekamp-Massey, Chien search and bit flipping.
//!
//! Bits are stored as `u8` values 0/1; index `i` of a word is the coefficient
//! of `x^i`, so systematic message bits sit in the top `k` positions.

use crate::gf2m::{FieldElement, FieldTables, Gf2mError};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BchError {
    #[error("invalid BCH parameters: {0}")]
    InvalidParameters(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] Gf2mError),
}

/// Narrow-sense binary BCH code of length 2^m - 1 with designed correction
/// radius `t` (design distance 2t + 1).
#[derive(Debug, Clone)]
pub struct BchCode {
    n: usize,
    k: usize,
    t: usize,
    d_min: usize,
    /// Generator polynomial over GF(2); `generator[i]` is the coefficient of x^i.
    generator: Vec<u8>,
    field: FieldTables,
}

/// The 2t syndromes S_1..S_2t of a received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndromes(pub Vec<FieldElement>);

impl Syndromes {
    pub fn all_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }
}

/// Error locator polynomial Lambda(x) with Lambda(0) = 1.
///
/// `degree` is the LFSR length produced by Berlekamp-Massey; coefficients
/// above the true polynomial degree may be zero.
#[derive(Debug, Clone)]
pub struct ErrorLocator {
    pub coeffs: Vec<FieldElement>,
    pub degree: usize,
}

/// Outcome of one bounded-distance decoding attempt. `Failure` is a normal
/// result (the word lies in no decoding sphere), not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BddOutcome {
    Corrected {
        codeword: Vec<u8>,
        error_positions: Vec<usize>,
    },
    Failure,
}

impl BddOutcome {
    pub fn is_corrected(&self) -> bool {
        matches!(self, BddOutcome::Corrected { .. })
    }

    pub fn codeword(&self) -> Option<&[u8]> {
        match self {
            BddOutcome::Corrected { codeword, .. } => Some(codeword),
            BddOutcome::Failure => None,
        }
    }
}

/// Scratch buffers reused across decode calls so the hot path stays
/// allocation-free. One workspace per worker thread.
#[derive(Debug, Clone)]
pub struct BddWorkspace {
    pub(crate) synd: Vec<FieldElement>,
    cur: Vec<FieldElement>,
    prev: Vec<FieldElement>,
    tmp: Vec<FieldElement>,
    pub(crate) roots: Vec<usize>,
    chien_exp: Vec<u32>,
    chien_deg: Vec<u32>,
}

impl BddWorkspace {
    pub fn new(code: &BchCode) -> BddWorkspace {
        let len = 2 * code.t + 1;
        BddWorkspace {
            synd: vec![FieldElement::ZERO; 2 * code.t],
            cur: vec![FieldElement::ZERO; len],
            prev: vec![FieldElement::ZERO; len],
            tmp: vec![FieldElement::ZERO; len],
            roots: Vec::with_capacity(2 * code.t),
            chien_exp: Vec::with_capacity(len),
            chien_deg: Vec::with_capacity(len),
        }
    }
}

impl BchCode {
    /// Builds the code over the given field: the generator polynomial is the
    /// LCM of the minimal polynomials of alpha^1..alpha^(2*t_design).
    pub fn new(m: u32, t_design: usize, field: FieldTables) -> Result<BchCode, BchError> {
        if field.m() != m {
            return Err(BchError::InvalidParameters(format!(
                "field is GF(2^{}), requested m = {m}",
                field.m()
            )));
        }
        if t_design == 0 {
            return Err(BchError::InvalidParameters("t_design must be >= 1".into()));
        }
        let n = field.order() as usize;

        // Distinct cyclotomic cosets of 1..=2t mod n; one minimal polynomial each.
        let mut seen = BTreeSet::new();
        let mut generator = vec![1u8];
        for j in 1..=2 * t_design {
            let rep = coset_min(j % n, n);
            if rep == 0 || !seen.insert(rep) {
                continue;
            }
            let min_poly = minimal_poly(rep, n, &field);
            generator = poly_mul_gf2(&generator, &min_poly);
        }

        let deg = generator.len() - 1;
        if deg >= n {
            return Err(BchError::InvalidParameters(format!(
                "generator degree {deg} leaves no message bits (n = {n})"
            )));
        }
        Ok(BchCode {
            n,
            k: n - deg,
            t: t_design,
            d_min: 2 * t_design + 1,
            generator,
            field,
        })
    }

    /// Builds the code over the default primitive polynomial for `m`.
    pub fn with_default_field(m: u32, t_design: usize) -> Result<BchCode, BchError> {
        let poly = crate::gf2m::default_primitive_poly(m).ok_or_else(|| {
            BchError::InvalidParameters(format!("no default primitive polynomial for m = {m}"))
        })?;
        BchCode::new(m, t_design, FieldTables::build(m, poly)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Designed correction radius.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Design distance 2t + 1.
    pub fn d_min(&self) -> usize {
        self.d_min
    }

    pub fn generator_poly(&self) -> &[u8] {
        &self.generator
    }

    pub fn field(&self) -> &FieldTables {
        &self.field
    }

    /// Systematic encoding: message bits land in positions n-k..n, parity in
    /// 0..n-k (the remainder of u(x) * x^(n-k) modulo the generator).
    pub fn encode(&self, u: &[u8]) -> Result<Vec<u8>, BchError> {
        if u.len() != self.k {
            return Err(BchError::LengthMismatch {
                expected: self.k,
                got: u.len(),
            });
        }
        let deg = self.n - self.k;
        let mut c = vec![0u8; self.n];
        c[deg..].copy_from_slice(u);
        // Long division of u(x) x^(n-k) by g(x); what is left below x^(n-k)
        // is the parity. XORing g onto the buffer cancels each leading term.
        let mut buf = c.clone();
        for i in (deg..self.n).rev() {
            if buf[i] == 1 {
                let s = i - deg;
                for (d, &g) in self.generator.iter().enumerate() {
                    buf[s + d] ^= g;
                }
            }
        }
        c[..deg].copy_from_slice(&buf[..deg]);
        Ok(c)
    }

    /// Recovers the message bits of a systematic codeword.
    pub fn extract_message<'a>(&self, codeword: &'a [u8]) -> &'a [u8] {
        &codeword[self.n - self.k..]
    }

    /// S_j = sum over set bits i of alpha^(j*i), for j = 1..2t.
    pub fn compute_syndromes(&self, word: &[u8]) -> Syndromes {
        let mut synd = vec![FieldElement::ZERO; 2 * self.t];
        self.syndromes_into(word, &mut synd);
        Syndromes(synd)
    }

    pub(crate) fn syndromes_into(&self, word: &[u8], out: &mut [FieldElement]) {
        debug_assert_eq!(word.len(), self.n);
        let n = self.n as u32;
        for (ji, s) in out.iter_mut().enumerate() {
            let step = ((ji + 1) % self.n) as u32;
            let mut acc = 0u32;
            let mut e = 0u32;
            for &bit in word {
                if bit == 1 {
                    acc ^= self.field.exp(e).0;
                }
                e += step;
                if e >= n {
                    e -= n;
                }
            }
            *s = FieldElement(acc);
        }
    }

    /// Berlekamp-Massey: the minimal-length LFSR generating S_1..S_2t.
    pub fn berlekamp_massey(&self, s: &Syndromes) -> ErrorLocator {
        let mut ws = BddWorkspace::new(self);
        ws.synd.copy_from_slice(&s.0);
        let degree = self.bm_into(&mut ws);
        ErrorLocator {
            coeffs: ws.cur[..=degree].to_vec(),
            degree,
        }
    }

    /// Runs BM on `ws.synd`, leaving Lambda in `ws.cur`. Returns the LFSR
    /// length L (may exceed t; the caller decides what to do).
    fn bm_into(&self, ws: &mut BddWorkspace) -> usize {
        let two_t = 2 * self.t;
        let f = &self.field;
        ws.cur.fill(FieldElement::ZERO);
        ws.prev.fill(FieldElement::ZERO);
        ws.cur[0] = FieldElement::ONE;
        ws.prev[0] = FieldElement::ONE;
        let mut l = 0usize;
        let mut shift = 1usize;
        let mut last_disc = FieldElement::ONE;

        for i in 0..two_t {
            let mut disc = ws.synd[i];
            for j in 1..=l.min(i) {
                disc = f.add(disc, f.mul(ws.cur[j], ws.synd[i - j]));
            }
            if disc.is_zero() {
                shift += 1;
                continue;
            }
            // cur(x) -= (disc / last_disc) x^shift prev(x)
            let coef = f.mul(disc, f.inv(last_disc).expect("nonzero discrepancy"));
            if 2 * l <= i {
                ws.tmp[..=l].copy_from_slice(&ws.cur[..=l]);
                for j in 0..=l.min(two_t - shift) {
                    let delta = f.mul(coef, ws.prev[j]);
                    ws.cur[j + shift] = f.add(ws.cur[j + shift], delta);
                }
                let new_l = i + 1 - l;
                ws.prev[..=l].copy_from_slice(&ws.tmp[..=l]);
                for e in ws.prev[l + 1..].iter_mut() {
                    *e = FieldElement::ZERO;
                }
                l = new_l;
                last_disc = disc;
                shift = 1;
            } else {
                for j in 0..=(two_t - shift).min(l) {
                    let delta = f.mul(coef, ws.prev[j]);
                    ws.cur[j + shift] = f.add(ws.cur[j + shift], delta);
                }
                shift += 1;
            }
        }
        l
    }

    /// All positions p in [0, n) with Lambda(alpha^(-p)) = 0.
    pub fn chien_search(&self, lambda: &ErrorLocator) -> Vec<usize> {
        let mut ws = BddWorkspace::new(self);
        ws.cur[..lambda.coeffs.len()].copy_from_slice(&lambda.coeffs);
        for e in ws.cur[lambda.coeffs.len()..].iter_mut() {
            *e = FieldElement::ZERO;
        }
        self.chien_into(lambda.degree, &mut ws);
        ws.roots.clone()
    }

    /// Chien search over `ws.cur[..=degree]`; roots end up in `ws.roots`.
    ///
    /// Term d of Lambda(alpha^(-p)) picks up a factor alpha^(-d) per position
    /// step, so only the exponents are updated. The scan stops once `degree`
    /// roots are found: a polynomial of degree <= L cannot have more.
    fn chien_into(&self, degree: usize, ws: &mut BddWorkspace) {
        ws.roots.clear();
        if degree == 0 {
            return;
        }
        let n = self.n as u32;
        ws.chien_exp.clear();
        ws.chien_deg.clear();
        for d in 1..=degree {
            if !ws.cur[d].is_zero() {
                ws.chien_exp.push(self.field.log(ws.cur[d]));
                ws.chien_deg.push(n - d as u32 % n);
            }
        }
        for p in 0..self.n {
            let mut acc = 1u32; // Lambda(0-th coefficient) = 1
            for &e in &ws.chien_exp {
                acc ^= self.field.exp(e).0;
            }
            if acc == 0 {
                ws.roots.push(p);
                if ws.roots.len() == degree {
                    return;
                }
            }
            for (e, step) in ws.chien_exp.iter_mut().zip(&ws.chien_deg) {
                *e += *step;
                if *e >= n {
                    *e -= n;
                }
            }
        }
    }

    /// Bounded-distance decoding of a hard-decision word.
    pub fn bdd_decode(&self, word: &[u8]) -> BddOutcome {
        assert_eq!(word.len(), self.n, "word length must equal n");
        let mut ws = BddWorkspace::new(self);
        self.syndromes_into(word, &mut ws.synd);
        if !self.bdd_core(&mut ws) {
            return BddOutcome::Failure;
        }
        let mut codeword = word.to_vec();
        for &p in &ws.roots {
            codeword[p] ^= 1;
        }
        BddOutcome::Corrected {
            codeword,
            error_positions: ws.roots.clone(),
        }
    }

    /// Decoding core on precomputed syndromes in `ws.synd`. On success the
    /// error positions are in `ws.roots` and `true` is returned.
    ///
    /// Success requires the Chien root count to match the BM degree, and the
    /// flipped word to have all-zero syndromes. The latter re-check matters
    /// for Chase trials: a perturbed word far from every codeword can still
    /// produce a locator with enough roots, and flipping those positions
    /// would not land on a codeword.
    pub(crate) fn bdd_core(&self, ws: &mut BddWorkspace) -> bool {
        if ws.synd.iter().all(|s| s.is_zero()) {
            ws.roots.clear();
            return true;
        }
        let degree = self.bm_into(ws);
        if degree == 0 || degree > self.t {
            return false;
        }
        self.chien_into(degree, ws);
        if ws.roots.len() != degree {
            return false;
        }
        for (ji, s) in ws.synd.iter().enumerate() {
            let mut acc = s.0;
            for &p in &ws.roots {
                acc ^= self.field.alpha_pow(((ji + 1) * p) as i64).0;
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }
}

fn coset_min(j: usize, n: usize) -> usize {
    let mut min = j;
    let mut x = (2 * j) % n;
    while x != j {
        min = min.min(x);
        x = (2 * x) % n;
    }
    min
}

/// Minimal polynomial of alpha^j: product of (x - alpha^e) over the
/// cyclotomic coset of j. The result has GF(2) coefficients.
fn minimal_poly(j: usize, n: usize, field: &FieldTables) -> Vec<u8> {
    let mut coset = vec![j];
    let mut x = (2 * j) % n;
    while x != j {
        coset.push(x);
        x = (2 * x) % n;
    }
    let mut poly = vec![FieldElement::ONE];
    for e in coset {
        let root = field.alpha_pow(e as i64);
        // poly *= (x + root)
        let mut next = vec![FieldElement::ZERO; poly.len() + 1];
        for (d, &c) in poly.iter().enumerate() {
            next[d + 1] = field.add(next[d + 1], c);
            next[d] = field.add(next[d], field.mul(c, root));
        }
        poly = next;
    }
    poly.iter()
        .map(|c| {
            debug_assert!(c.0 <= 1, "minimal polynomial coefficient not in GF(2)");
            c.0 as u8
        })
        .collect()
}

fn poly_mul_gf2(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 1 {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] ^= bj;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::default_primitive_poly;
    use rand::seq::index::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn code(m: u32, t: usize) -> BchCode {
        BchCode::with_default_field(m, t).unwrap()
    }

    fn random_word(k: usize, rng: &mut impl Rng) -> Vec<u8> {
        (0..k).map(|_| rng.random_range(0..2u8)).collect()
    }

    /// Polynomial remainder over GF(2), used to check g | x^n - 1.
    fn poly_rem_gf2(mut a: Vec<u8>, b: &[u8]) -> Vec<u8> {
        let db = b.len() - 1;
        for i in (db..a.len()).rev() {
            if a[i] == 1 {
                let s = i - db;
                for (d, &g) in b.iter().enumerate() {
                    a[s + d] ^= g;
                }
            }
        }
        a.truncate(db);
        a
    }

    #[test]
    fn reference_code_parameters() {
        let c = code(7, 10);
        assert_eq!((c.n(), c.k(), c.t(), c.d_min()), (127, 64, 10, 21));
        assert_eq!(c.generator_poly().len() - 1, 63);
    }

    #[test]
    fn hamming_15_11() {
        let c = code(4, 1);
        assert_eq!((c.n(), c.k()), (15, 11));
        assert_eq!(c.generator_poly().len() - 1, 4);
        // Brute-force cross-check: deg of the minimal polynomial of alpha
        // equals the coset size of 1 mod 15, and m1 = m2 by conjugacy.
        assert_eq!(c.generator_poly(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn bch_15_5() {
        let c = code(4, 3);
        assert_eq!((c.n(), c.k()), (15, 5));
        assert_eq!(c.generator_poly().len() - 1, 10);
    }

    #[test]
    fn generator_divides_x_n_minus_1() {
        for (m, t) in [(4u32, 1usize), (4, 3), (5, 3), (7, 10)] {
            let c = code(m, t);
            let mut xn1 = vec![0u8; c.n() + 1];
            xn1[0] = 1;
            xn1[c.n()] = 1;
            let rem = poly_rem_gf2(xn1, c.generator_poly());
            assert!(rem.iter().all(|&b| b == 0), "m={m} t={t}");
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        let field = FieldTables::build(3, default_primitive_poly(3).unwrap()).unwrap();
        // t = 3 consumes every nonzero coset mod 7: the (7,1) repetition-like
        // code is still valid, k = 1.
        let c = BchCode::new(3, 3, field.clone()).unwrap();
        assert_eq!(c.k(), 1);
        assert!(matches!(
            BchCode::new(3, 0, field.clone()),
            Err(BchError::InvalidParameters(_))
        ));
        // Field degree must match m.
        assert!(matches!(
            BchCode::new(4, 1, field),
            Err(BchError::InvalidParameters(_))
        ));
    }

    #[test]
    fn encode_zero_and_linearity() {
        let c = code(4, 3);
        assert_eq!(c.encode(&vec![0; 5]).unwrap(), vec![0; 15]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let u1 = random_word(5, &mut rng);
            let u2 = random_word(5, &mut rng);
            let sum: Vec<u8> = u1.iter().zip(&u2).map(|(a, b)| a ^ b).collect();
            let c1 = c.encode(&u1).unwrap();
            let c2 = c.encode(&u2).unwrap();
            let cs = c.encode(&sum).unwrap();
            let xor: Vec<u8> = c1.iter().zip(&c2).map(|(a, b)| a ^ b).collect();
            assert_eq!(cs, xor);
        }
    }

    #[test]
    fn encode_is_systematic_and_codeword() {
        let c = code(7, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let u = random_word(c.k(), &mut rng);
            let cw = c.encode(&u).unwrap();
            assert_eq!(c.extract_message(&cw), &u[..]);
            assert!(c.compute_syndromes(&cw).all_zero());
        }
        assert!(matches!(
            c.encode(&vec![0; 10]),
            Err(BchError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn syndromes_of_single_error() {
        let c = code(4, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let u = random_word(c.k(), &mut rng);
            let mut w = c.encode(&u).unwrap();
            let p = rng.random_range(0..c.n());
            w[p] ^= 1;
            let s = c.compute_syndromes(&w);
            for j in 1..=2 * c.t() {
                assert_eq!(s.0[j - 1], c.field().alpha_pow((j * p) as i64));
            }
        }
        assert!(c.compute_syndromes(&vec![0; 15]).all_zero());
    }

    #[test]
    fn bm_zero_and_single_error() {
        let c = code(4, 3);
        let lam = c.berlekamp_massey(&Syndromes(vec![FieldElement::ZERO; 6]));
        assert_eq!(lam.degree, 0);
        assert_eq!(lam.coeffs, vec![FieldElement::ONE]);

        // Single error at p: Lambda(x) = 1 + alpha^p x.
        for p in [0usize, 3, 14] {
            let s = Syndromes(
                (1..=6)
                    .map(|j| c.field().alpha_pow((j * p) as i64))
                    .collect(),
            );
            let lam = c.berlekamp_massey(&s);
            assert_eq!(lam.degree, 1);
            assert_eq!(lam.coeffs[1], c.field().alpha_pow(p as i64));
            assert_eq!(c.chien_search(&lam), vec![p]);
        }
    }

    #[test]
    fn chien_of_unit_locator_is_empty() {
        let c = code(4, 3);
        let lam = ErrorLocator {
            coeffs: vec![FieldElement::ONE],
            degree: 0,
        };
        assert!(c.chien_search(&lam).is_empty());
    }

    #[test]
    fn chien_finds_injected_positions() {
        let c = code(7, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let nu = rng.random_range(1..=c.t());
            let positions: Vec<usize> = sample(&mut rng, c.n(), nu).into_iter().collect();
            let mut w = vec![0u8; c.n()];
            for &p in &positions {
                w[p] = 1;
            }
            let s = c.compute_syndromes(&w);
            let lam = c.berlekamp_massey(&s);
            assert_eq!(lam.degree, nu);
            let mut roots = c.chien_search(&lam);
            roots.sort_unstable();
            let mut expect = positions.clone();
            expect.sort_unstable();
            assert_eq!(roots, expect);
        }
    }

    #[test]
    fn round_trip_within_radius() {
        let c = code(7, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for w in 0..=c.t() {
            for _ in 0..200 {
                let u = random_word(c.k(), &mut rng);
                let cw = c.encode(&u).unwrap();
                let mut rx = cw.clone();
                for p in sample(&mut rng, c.n(), w) {
                    rx[p] ^= 1;
                }
                match c.bdd_decode(&rx) {
                    BddOutcome::Corrected {
                        codeword,
                        error_positions,
                    } => {
                        assert_eq!(codeword, cw, "weight {w}");
                        assert_eq!(error_positions.len(), w);
                        assert!(c.compute_syndromes(&codeword).all_zero());
                    }
                    BddOutcome::Failure => panic!("failed within radius, weight {w}"),
                }
            }
        }
    }

    #[test]
    fn decode_codeword_is_identity() {
        let c = code(7, 10);
        let cw = c.encode(&vec![1; c.k()]).unwrap();
        match c.bdd_decode(&cw) {
            BddOutcome::Corrected {
                codeword,
                error_positions,
            } => {
                assert_eq!(codeword, cw);
                assert!(error_positions.is_empty());
            }
            BddOutcome::Failure => panic!(),
        }
    }

    #[test]
    fn beyond_radius_never_returns_transmitted() {
        // Weight t+1 errors: decoding fails or miscorrects to a different
        // codeword; either way the output is never the transmitted word and
        // any corrected output is a true codeword within distance t.
        let c = code(7, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut failures = 0;
        for _ in 0..300 {
            let u = random_word(c.k(), &mut rng);
            let cw = c.encode(&u).unwrap();
            let mut rx = cw.clone();
            for p in sample(&mut rng, c.n(), c.t() + 1) {
                rx[p] ^= 1;
            }
            match c.bdd_decode(&rx) {
                BddOutcome::Corrected {
                    codeword,
                    error_positions,
                } => {
                    assert_ne!(codeword, cw);
                    assert!(c.compute_syndromes(&codeword).all_zero());
                    assert!(error_positions.len() <= c.t());
                    let dist = codeword.iter().zip(&rx).filter(|(a, b)| a != b).count();
                    assert!(dist <= c.t());
                }
                BddOutcome::Failure => failures += 1,
            }
        }
        assert!(failures > 150, "failures should dominate, got {failures}");
    }
}
