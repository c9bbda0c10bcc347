use std::cmp::Ordering;

/// Exponent vector. The derived `Ord` is not used; ordering goes through
/// [`Monomial::cmp`], which is graded lexicographic with the last variable
/// highest (the default [`MonomialOrder`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    /// Derivative with respect to variable `i`: the multiplier and the
    /// reduced monomial, or `None` if the exponent is zero.
    pub fn derivative(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.0[i];
        if e == 0 {
            return None;
        }
        let mut m = self.0.clone();
        m[i] -= 1;
        Some((e, Monomial(m)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

/// Graded lexicographic order with a chosen variable priority.
///
/// `priority[0]` is the most significant variable. The default for `n`
/// variables puts the last variable first, so for (x, y, z) we get
/// z > y > x and the leading monomial of x²+y²−z² is z².
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn default_for(nvars: usize) -> Self {
        MonomialOrder {
            priority: (0..nvars).rev().collect(),
        }
    }

    /// `priority` must be a permutation of `0..n`.
    pub fn with_priority(priority: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(MonomialOrder { priority })
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            self.priority
                .iter()
                .map(|&i| a.exponent(i).cmp(&b.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    pub fn is_default(&self) -> bool {
        self.priority
            .iter()
            .rev()
            .copied()
            .eq(0..self.priority.len())
    }
}

/// All monomials in `nvars` variables of total degree exactly `degree`,
/// sorted in descending default order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, idx: usize, remaining: u32) {
    if idx + 1 == current.len() {
        current[idx] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    if current.is_empty() {
        if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    for e in 0..=remaining {
        current[idx] = e;
        fill(out, current, idx + 1, remaining - e);
    }
}

/// All monomials of degree at most `degree`, descending.
pub fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Monomial> {
    (0..=degree)
        .rev()
        .flat_map(|d| monomials_of_degree(nvars, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_order_is_graded_with_last_variable_highest() {
        let x = Monomial::var(3, 0);
        let z = Monomial::var(3, 2);
        let xx = x.mul(&x);
        assert!(z > x);
        assert!(xx > z);
        let ord = MonomialOrder::default_for(3);
        assert!(ord.is_default());
        assert_eq!(ord.cmp(&z, &x), Ordering::Greater);
        let rev = MonomialOrder::with_priority(vec![0, 1, 2]).unwrap();
        assert_eq!(rev.cmp(&z, &x), Ordering::Less);
        assert!(MonomialOrder::with_priority(vec![0, 0, 1]).is_none());
    }

    #[test]
    fn stars_and_bars_counts() {
        for n in 0..7u32 {
            let expected = ((n + 1) * (n + 2) / 2) as usize;
            assert_eq!(monomials_of_degree(3, n).len(), expected);
        }
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 1).len(), 0);
    }
}
