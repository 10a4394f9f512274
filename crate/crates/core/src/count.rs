//! Exact counts and binomial coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Parses a decimal count. Leading/trailing whitespace is ignored.
pub fn parse_count(text: &str) -> crate::Result<BigCount> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(crate::Error::Parse {
            line: 1,
            message: format!("not a decimal count: {text:?}"),
        });
    }
    Ok(text.parse::<BigUint>().expect("validated digits"))
}

/// Serde adapter writing counts as decimal strings.
pub mod decimal {
    use super::BigCount;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigCount, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigCount, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_count(&text).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::super::BigCount;
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(values: &[BigCount], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_str_radix(10))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigCount>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| super::super::parse_count(t).map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod opt_vec {
        use super::super::BigCount;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(
            values: &Option<Vec<BigCount>>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            match values {
                Some(v) => super::vec::serialize(v, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Vec<BigCount>>, D::Error> {
            #[derive(Deserialize)]
            struct Wrap(#[serde(with = "super::vec")] Vec<BigCount>);
            Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
        }
    }
}

/// Pascal triangle over big integers, grown on demand.
#[derive(Debug, Clone, Default)]
pub struct Binomials {
    rows: Vec<Vec<BigCount>>,
}

impl Binomials {
    pub fn new() -> Self {
        Self::default()
    }

    /// `C(n, r)`, zero when `r > n`.
    pub fn get(&mut self, n: usize, r: usize) -> BigCount {
        if r > n {
            return BigCount::zero();
        }
        self.grow(n);
        self.rows[n][r].clone()
    }

    pub fn row(&mut self, n: usize) -> &[BigCount] {
        self.grow(n);
        &self.rows[n]
    }

    /// `Σ_{j=0}^{upto} C(n, j)`.
    pub fn prefix_sum(&mut self, n: usize, upto: usize) -> BigCount {
        self.grow(n);
        self.rows[n][..=upto.min(n)].iter().sum()
    }

    fn grow(&mut self, n: usize) {
        while self.rows.len() <= n {
            let next = match self.rows.last() {
                None => vec![BigCount::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigCount::one());
                    for w in prev.windows(2) {
                        row.push(&w[0] + &w[1]);
                    }
                    row.push(BigCount::one());
                    row
                }
            };
            self.rows.push(next);
        }
    }
}

/// `[C(n,0), C(n,1), …, C(n,upto)]` by the multiplicative recurrence.
///
/// Used where `n` is far too large for a Pascal triangle (the padding size of
/// the vertex-cover kernel) but only a short prefix of the row is needed.
pub fn binomial_row(n: u64, upto: u64) -> Vec<BigCount> {
    let last = upto.min(n);
    let mut row = Vec::with_capacity(last as usize + 1);
    let mut c = BigCount::one();
    row.push(c.clone());
    for r in 0..last {
        c = c * BigCount::from(n - r) / BigCount::from(r + 1);
        row.push(c.clone());
    }
    row
}

/// Single binomial coefficient, `u128` fast path for small arguments.
pub fn binomial(n: u64, r: u64) -> BigCount {
    if r > n {
        return BigCount::zero();
    }
    let r = r.min(n - r);
    let mut c = BigCount::one();
    for i in 0..r {
        c = c * BigCount::from(n - i) / BigCount::from(i + 1);
    }
    c
}

/// `Σ_{i=0}^{k} C(n, i)` as `u128`, saturating.
pub fn subsets_up_to(n: u64, k: u64) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=k.min(n) {
        if i > 0 {
            c = match c.checked_mul((n - i + 1) as u128) {
                Some(v) => v / i as u128,
                None => return u128::MAX,
            };
        }
        total = total.saturating_add(c);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_matches_multiplicative() {
        let mut b = Binomials::new();
        for n in 0..40u64 {
            let row = binomial_row(n, n);
            for r in 0..=n {
                assert_eq!(b.get(n as usize, r as usize), row[r as usize]);
                assert_eq!(binomial(n, r), row[r as usize]);
            }
        }
        assert_eq!(b.get(3, 5), BigCount::zero());
    }

    #[test]
    fn large_row_prefix() {
        let row = binomial_row(373_752, 3);
        assert_eq!(row[1], BigCount::from(373_752u64));
        assert_eq!(
            row[2],
            BigCount::from(373_752u128 * 373_751 / 2)
        );
    }

    #[test]
    fn subset_totals() {
        assert_eq!(subsets_up_to(3, 2), 7);
        assert_eq!(subsets_up_to(5, 10), 32);
        assert_eq!(subsets_up_to(0, 0), 1);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_count("12a").is_err());
        assert!(parse_count("").is_err());
        assert!(parse_count("-1").is_err());
        assert_eq!(parse_count(" 544\n").unwrap(), BigCount::from(544u32));
    }
}
