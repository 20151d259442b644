//! Square ice with domain-wall boundary conditions: the bijection with
//! alternating sign matrices, spectral-parameter vertex weights, the
//! brute-force partition function, and its two determinant closed forms.
//!
//! Vertex states are numbered 1..=6. States 1 and 2 sit exactly where the
//! matrix has `+1` and `-1`; the four zero states are distinguished by the
//! directions of the arrows through the vertex, which are forced by the
//! partial sums of the matrix: the horizontal edge right of cell `(i,j)`
//! points right iff the row sum through column `j` is 0, and the vertical
//! edge below `(i,j)` points up iff the column sum through row `i` is 0.
//! With domain-wall boundaries this correspondence is a bijection.
//!
//! Weights use square-root spectral parameters: `a_i` plays `q^{x_i}` and
//! `b_j` plays `q^{y_j}`, so every bracket `[x_i - y_j]` and the
//! half-integer prefactors of the closed forms are honest rationals.

use num::traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::asm::{for_each_asm, Asm};
use crate::report::CheckError;
use crate::ring::{rat, rat_pow, Rat, SqMatrix};
use crate::sample::draw_nonzero_rat;

/// Errors from reading an ice configuration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IceError {
    /// The state grid does not describe a consistent arrow configuration
    /// with domain-wall boundaries.
    #[error("inconsistent arrows: {0}")]
    InconsistentArrows(String),
}

/// A square-ice configuration, stored as the vertex state 1..=6 per cell.
/// Edge directions are derived views, never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IceState {
    n: usize,
    states: Vec<Vec<u8>>,
}

/// How many vertices sit in each of the six states.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StateCounts {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
    pub n5: usize,
    pub n6: usize,
}

impl IceState {
    pub fn from_states(states: Vec<Vec<u8>>) -> Result<IceState, IceError> {
        let n = states.len();
        if n == 0 || states.iter().any(|r| r.len() != n) {
            return Err(IceError::InconsistentArrows("grid is not square".into()));
        }
        if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !(1..=6).contains(&states[i][j]))
        {
            return Err(IceError::InconsistentArrows(format!(
                "cell ({},{}) holds {}, outside 1..=6",
                i + 1,
                j + 1,
                states[i][j]
            )));
        }
        Ok(IceState { n, states })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// State at 1-based `(i, j)`.
    pub fn state(&self, i: usize, j: usize) -> u8 {
        self.states[i - 1][j - 1]
    }

    pub fn counts(&self) -> StateCounts {
        let mut c = [0usize; 6];
        for row in &self.states {
            for &s in row {
                c[s as usize - 1] += 1;
            }
        }
        StateCounts { n1: c[0], n2: c[1], n3: c[2], n4: c[3], n5: c[4], n6: c[5] }
    }
}

impl std::fmt::Display for IceState {
    /// `n` lines of `n` digits 1..=6.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, row) in self.states.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for &s in row {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// The unique ice configuration whose entry map gives back `a`.
pub fn asm_to_ice(a: &Asm) -> IceState {
    let n = a.n();
    let mut states = vec![vec![0u8; n]; n];
    // Column sums through the current row, updated as rows are scanned.
    let mut col = vec![0i32; n];
    for i in 1..=n {
        let mut row = 0i32;
        for j in 1..=n {
            let e = a.entry(i, j);
            row += i32::from(e);
            col[j - 1] += i32::from(e);
            states[i - 1][j - 1] = match e {
                1 => 1,
                -1 => 2,
                _ => {
                    // Zero entry: both horizontal edges agree, both vertical
                    // edges agree; the two booleans pick among states 3..=6.
                    let right = row == 0;
                    let up = col[j - 1] == 0;
                    match (right, up) {
                        (true, true) => 3,
                        (false, false) => 4,
                        (false, true) => 5,
                        (true, false) => 6,
                    }
                }
            };
        }
    }
    IceState { n, states }
}

/// Inverse of [`asm_to_ice`]: read the entries off states 1 and 2, validate,
/// and demand that the canonical configuration of that matrix reproduces the
/// input — any deviation means the arrows were inconsistent.
pub fn ice_to_asm(s: &IceState) -> Result<Asm, IceError> {
    let grid: Vec<Vec<i64>> = s
        .states
        .iter()
        .map(|row| {
            row.iter()
                .map(|&st| match st {
                    1 => 1,
                    2 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let asm = Asm::from_rows(&grid)
        .map_err(|e| IceError::InconsistentArrows(format!("entry map is not a valid matrix: {e}")))?;
    let canonical = asm_to_ice(&asm);
    if canonical != *s {
        let (i, j) = (1..=s.n)
            .flat_map(|i| (1..=s.n).map(move |j| (i, j)))
            .find(|&(i, j)| canonical.state(i, j) != s.state(i, j))
            .expect("configurations differ");
        return Err(IceError::InconsistentArrows(format!(
            "cell ({i},{j}) is in state {}, but the surrounding arrows force state {}",
            s.state(i, j),
            canonical.state(i, j)
        )));
    }
    Ok(asm)
}

/// Spectral parameters in square-root form: `a_i` plays `q^{x_i}`, `b_j`
/// plays `q^{y_j}`, and `u_i = a_i^2`, `v_j = b_j^2` are the variables of
/// the determinant formulas.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralParams {
    a: Vec<Rat>,
    b: Vec<Rat>,
    q: Rat,
}

impl SpectralParams {
    /// Basic well-definedness: equal lengths, everything nonzero, and
    /// `q != ±1` so the bracket denominator `q - q^{-1}` survives.
    pub fn new(a: Vec<Rat>, b: Vec<Rat>, q: Rat) -> Result<SpectralParams, CheckError> {
        if a.is_empty() || a.len() != b.len() {
            return Err(CheckError::DegenerateParams(format!(
                "need equally many row and column parameters, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        if a.iter().chain(&b).any(Rat::is_zero) {
            return Err(CheckError::DegenerateParams("zero spectral parameter".into()));
        }
        if q.is_zero() || q == rat(1, 1) || q == rat(-1, 1) {
            return Err(CheckError::DegenerateParams(format!(
                "q = {q} makes the bracket denominator q - 1/q vanish or undefined"
            )));
        }
        Ok(SpectralParams { a, b, q })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: usize) -> &Rat {
        &self.a[i - 1]
    }

    pub fn b(&self, j: usize) -> &Rat {
        &self.b[j - 1]
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn u(&self, i: usize) -> Rat {
        self.a(i) * self.a(i)
    }

    pub fn v(&self, j: usize) -> Rat {
        self.b(j) * self.b(j)
    }

    /// Full genericity needed by the determinant denominators: pairwise
    /// distinct `u`'s and `v`'s, and `u_i` avoiding `v_j` and `q^2 v_j`.
    pub fn ensure_generic(&self) -> Result<(), CheckError> {
        let n = self.n();
        let qq = &self.q * &self.q;
        for i in 1..=n {
            for j in 1..=n {
                if i < j && (self.u(i) == self.u(j) || self.v(i) == self.v(j)) {
                    return Err(CheckError::DegenerateParams(format!(
                        "repeated spectral parameter between rows/columns {i} and {j}"
                    )));
                }
                if self.u(i) == self.v(j) || self.u(i) == &qq * self.v(j) {
                    return Err(CheckError::DegenerateParams(format!(
                        "u_{i} collides with v_{j} or q^2 v_{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Seeded draw of a fully generic parameter set (rejection sampling).
    pub fn draw_generic(n: usize, rng: &mut impl Rng) -> SpectralParams {
        loop {
            let a: Vec<Rat> = (0..n).map(|_| draw_nonzero_rat(rng)).collect();
            let b: Vec<Rat> = (0..n).map(|_| draw_nonzero_rat(rng)).collect();
            let q = draw_nonzero_rat(rng);
            let Ok(p) = SpectralParams::new(a, b, q) else { continue };
            if p.ensure_generic().is_ok() {
                return p;
            }
        }
    }

    fn dq(&self) -> Rat {
        &self.q - self.q.recip()
    }

    /// Weight of the zero states 5 and 6: the bracket `[x_i - y_j]`.
    pub fn w0(&self, i: usize, j: usize) -> Rat {
        let (a, b) = (self.a(i), self.b(j));
        (a * a - b * b) / (a * b * self.dq())
    }

    /// Weight of the zero states 3 and 4: the bracket `[x_i - y_j - 1]`.
    pub fn w1(&self, i: usize, j: usize) -> Rat {
        let (a, b) = (self.a(i), self.b(j));
        (a * a - &self.q * &self.q * b * b) / (&self.q * a * b * self.dq())
    }
}

/// Product over all vertices of the state weight: states 1 and 2 contribute
/// `-b_j/a_i` and `-a_i/b_j`, the zero states the brackets of
/// [`SpectralParams::w0`]/[`SpectralParams::w1`].
pub fn config_weight(s: &IceState, params: &SpectralParams) -> Rat {
    assert_eq!(s.n(), params.n(), "configuration and parameters disagree on the order");
    let mut w = rat(1, 1);
    for i in 1..=s.n() {
        for j in 1..=s.n() {
            w *= match s.state(i, j) {
                1 => -(params.b(j) / params.a(i)),
                2 => -(params.a(i) / params.b(j)),
                3 | 4 => params.w1(i, j),
                _ => params.w0(i, j),
            };
        }
    }
    w
}

/// The partition function by direct summation over all configurations.
/// Exponential work: restricted to `n <= 6`.
pub fn brute_zn(params: &SpectralParams) -> Rat {
    let n = params.n();
    assert!(n <= 6, "brute-force partition function is restricted to n <= 6");
    let mut z = Rat::zero();
    for_each_asm(n, |a| {
        z += config_weight(&asm_to_ice(a), params);
    });
    z
}

/// Partition function via the determinant closed form in bracket weights:
/// `(-1)^n prod(b_i/a_i) * prod_{i,j} w1 w0 / (prod_{j<i}[x_i-x_j] *
/// prod_{i<j}[y_i-y_j]) * det(1/(w1 w0))`.
pub fn ik_zn(params: &SpectralParams) -> Result<Rat, CheckError> {
    params.ensure_generic()?;
    let n = params.n();
    let dq = params.dq();
    let mut pre = rat(1, 1);
    if n % 2 == 1 {
        pre = -pre;
    }
    for i in 1..=n {
        pre *= params.b(i) / params.a(i);
    }
    for i in 1..=n {
        for j in 1..=n {
            pre *= params.w1(i, j) * params.w0(i, j);
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if j < i {
                // Bracket [x_i - x_j] realized through the a's.
                let (ai, aj) = (params.a(i), params.a(j));
                pre /= (ai * ai - aj * aj) / (ai * aj * &dq);
            }
            if i < j {
                let (bi, bj) = (params.b(i), params.b(j));
                pre /= (bi * bi - bj * bj) / (bi * bj * &dq);
            }
        }
    }
    let kernel = SqMatrix::from_fn(n, |i, j| (params.w1(i, j) * params.w0(i, j)).recip());
    Ok(pre * kernel.det())
}

/// The same partition function through the rational substitution
/// `u_i = a_i^2`, `v_j = b_j^2`:
/// `(-1)^{n(n+1)/2} prod(u_i-v_j)(u_i-q²v_j) det(1/((u_i-v_j)(u_i-q²v_j)))
///  / ((q²-1)^{n²-n} prod_i (a_i b_i)^n b_i^{-2} prod_{i<j}(u_i-u_j)(v_i-v_j))`.
pub fn ik_zn_uv(params: &SpectralParams) -> Result<Rat, CheckError> {
    params.ensure_generic()?;
    let n = params.n();
    let qq = params.q() * params.q();
    let mut num = rat(1, 1);
    if n * (n + 1) / 2 % 2 == 1 {
        num = -num;
    }
    for i in 1..=n {
        for j in 1..=n {
            num *= (params.u(i) - params.v(j)) * (params.u(i) - &qq * params.v(j));
        }
    }
    let mut den = rat_pow(&(&qq - rat(1, 1)), (n * n - n) as i64);
    for i in 1..=n {
        den *= rat_pow(&(params.a(i) * params.b(i)), n as i64) / params.v(i);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            den *= (params.u(i) - params.u(j)) * (params.v(i) - params.v(j));
        }
    }
    let kernel = SqMatrix::from_fn(n, |i, j| {
        ((params.u(i) - params.v(j)) * (params.u(i) - &qq * params.v(j))).recip()
    });
    Ok(num * kernel.det() / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::enumerate_asms;
    use crate::sample::rng_for;

    fn example_5x5() -> Asm {
        Asm::from_rows(&vec![
            vec![0, 1, 0, 0, 0],
            vec![1, -1, 0, 1, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0],
        ])
        .unwrap()
    }

    fn frozen_grid() -> Vec<Vec<u8>> {
        vec![
            vec![3, 1, 5, 5, 5],
            vec![1, 2, 3, 1, 5],
            vec![6, 1, 5, 2, 1],
            vec![6, 6, 3, 1, 4],
            vec![6, 6, 1, 4, 4],
        ]
    }

    #[test]
    fn the_running_example_maps_to_its_known_configuration() {
        let ice = asm_to_ice(&example_5x5());
        assert_eq!(ice, IceState::from_states(frozen_grid()).unwrap());
        let c = ice.counts();
        assert_eq!(c, StateCounts { n1: 7, n2: 2, n3: 3, n4: 3, n5: 5, n6: 5 });
        assert_eq!(ice.to_string(), "31555\n12315\n61521\n66314\n66144");
    }

    #[test]
    fn single_vertex_maps_to_state_one() {
        let ice = asm_to_ice(&Asm::identity(1));
        assert_eq!(ice.state(1, 1), 1);
        assert_eq!(ice_to_asm(&ice).unwrap(), Asm::identity(1));
    }

    #[test]
    fn round_trip_and_count_relations_hold_for_all_small_orders() {
        for n in 1..=5 {
            let mu_total: u32 = enumerate_asms(n)
                .iter()
                .map(|a| {
                    let ice = asm_to_ice(a);
                    assert_eq!(ice_to_asm(&ice).unwrap(), *a, "round trip at n = {n}");
                    let c = ice.counts();
                    assert_eq!(c.n1, n + c.n2, "state-1 relation");
                    assert_eq!(c.n3, c.n4, "state-3/4 balance");
                    assert_eq!(c.n5, c.n6, "state-5/6 balance");
                    assert_eq!(c.n1 + c.n2 + c.n3 + c.n4 + c.n5 + c.n6, n * n);
                    assert_eq!(c.n2 as u32, a.stats().mu, "minus-one count is n2");
                    c.n2 as u32
                })
                .sum();
            // Sanity: some matrices do carry state 2 for n >= 3.
            if n >= 3 {
                assert!(mu_total > 0);
            }
        }
    }

    #[test]
    fn tampered_grids_are_rejected() {
        let mut g = frozen_grid();
        g[0][0] = 4;
        let ice = IceState::from_states(g).unwrap();
        assert!(matches!(ice_to_asm(&ice), Err(IceError::InconsistentArrows(_))));

        let all_ones = IceState::from_states(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(ice_to_asm(&all_ones), Err(IceError::InconsistentArrows(_))));

        assert!(IceState::from_states(vec![vec![7]]).is_err());
        assert!(IceState::from_states(vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn homogeneous_weight_of_the_example_matches_the_bracket_product() {
        // All a_i = a, b_j = b: the weight collapses to
        // -(b/a)^5 * [xi-1]^6 * [xi]^10 with q^xi = a/b.
        let (a, b, q) = (rat(3, 1), rat(2, 1), rat(5, 1));
        let params =
            SpectralParams::new(vec![a.clone(); 5], vec![b.clone(); 5], q.clone()).unwrap();
        let w = config_weight(&asm_to_ice(&example_5x5()), &params);
        let dq = &q - q.recip();
        let w0 = (&a * &a - &b * &b) / (&a * &b * &dq);
        let w1 = (&a * &a - &q * &q * &b * &b) / (&q * &a * &b * &dq);
        let expect = -rat_pow(&(&b / &a), 5) * rat_pow(&w1, 6) * rat_pow(&w0, 10);
        assert_eq!(w, expect);
    }

    #[test]
    fn zero_weight_appears_exactly_where_a_bracket_vanishes() {
        // a_i = q*b_j makes [xi-1] vanish; the example has states 3/4, so
        // its weight dies.
        let q = rat(3, 1);
        let params = SpectralParams::new(vec![rat(6, 1); 5], vec![rat(2, 1); 5], q).unwrap();
        assert!(config_weight(&asm_to_ice(&example_5x5()), &params).is_zero());
    }

    #[test]
    fn order_one_partition_function_is_the_single_weight() {
        let params = SpectralParams::new(vec![rat(7, 3)], vec![rat(5, 2)], rat(4, 1)).unwrap();
        let expect = -rat(5, 2) / rat(7, 3);
        assert_eq!(brute_zn(&params), expect);
        assert_eq!(ik_zn(&params).unwrap(), expect);
        assert_eq!(ik_zn_uv(&params).unwrap(), expect);
    }

    #[test]
    fn order_two_homogeneous_sum_matches_the_hand_expansion() {
        let (a, b, q) = (rat(3, 2), rat(7, 5), rat(2, 1));
        let params =
            SpectralParams::new(vec![a.clone(), a.clone()], vec![b.clone(), b.clone()], q.clone())
                .unwrap();
        let dq = &q - q.recip();
        let w0 = (&a * &a - &b * &b) / (&a * &b * &dq);
        let w1 = (&a * &a - &q * &q * &b * &b) / (&q * &a * &b * &dq);
        let expect = rat_pow(&(&b / &a), 2) * (&w0 * &w0 + &w1 * &w1);
        assert_eq!(brute_zn(&params), expect);
    }

    #[test]
    fn determinant_forms_agree_with_brute_force_on_seeded_draws() {
        for n in 1..=3 {
            for iter in 0..6 {
                let mut rng = rng_for(42, "ice-module", n as u64, iter);
                let params = SpectralParams::draw_generic(n, &mut rng);
                let z = brute_zn(&params);
                assert_eq!(ik_zn(&params).unwrap(), z, "bracket form at n = {n}, iter {iter}");
                assert_eq!(ik_zn_uv(&params).unwrap(), z, "uv form at n = {n}, iter {iter}");
            }
        }
    }

    #[test]
    fn degenerate_parameters_are_rejected_eagerly() {
        assert!(SpectralParams::new(vec![rat(1, 1)], vec![rat(2, 1)], rat(1, 1)).is_err());
        assert!(SpectralParams::new(vec![rat(0, 1)], vec![rat(2, 1)], rat(3, 1)).is_err());
        assert!(SpectralParams::new(vec![rat(1, 1)], vec![rat(1, 2), rat(2, 1)], rat(3, 1)).is_err());
        // Repeated u's pass construction but fail genericity.
        let p = SpectralParams::new(
            vec![rat(2, 1), rat(-2, 1)],
            vec![rat(3, 1), rat(5, 1)],
            rat(7, 1),
        )
        .unwrap();
        assert!(matches!(p.ensure_generic(), Err(CheckError::DegenerateParams(_))));
        // u_1 = q^2 v_1 also fails.
        let p2 = SpectralParams::new(vec![rat(6, 1)], vec![rat(2, 1)], rat(3, 1)).unwrap();
        assert!(p2.ensure_generic().is_err());
        assert!(matches!(ik_zn(&p2), Err(CheckError::DegenerateParams(_))));
    }
}
