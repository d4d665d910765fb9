use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::affine::AffineWeight;
use super::exp_series::ExpSeries;
use crate::error::{Error, Result};
use crate::lie::FiniteWeight;
use crate::linalg::Q;

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    base: Vec<String>,
    level: String,
    delta: String,
    order: u32,
    q_half: bool,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    exps: Vec<u32>,
    coeff: String,
}

fn parse_q(s: &str) -> Result<Q> {
    s.parse::<Q>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Canonical JSON form; terms are sorted by exponent vector.
pub fn to_json(s: &ExpSeries) -> String {
    let doc = SeriesDoc {
        base: s
            .base()
            .fin
            .coords()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        level: s.base().level.to_string(),
        delta: s.base().delta.to_string(),
        order: s.order(),
        q_half: s.q_half(),
        terms: s
            .terms()
            .iter()
            .map(|(e, c)| TermDoc {
                exps: e.clone(),
                coeff: c.to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("series documents always serialize")
}

pub fn from_json(text: &str) -> Result<ExpSeries> {
    let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let fin = doc
        .base
        .iter()
        .map(|c| parse_q(c))
        .collect::<Result<Vec<Q>>>()?;
    let nvars = fin.len() + 1;
    let base = AffineWeight::new(
        FiniteWeight(fin),
        parse_q(&doc.level)?,
        parse_q(&doc.delta)?,
    );
    let mut s = ExpSeries::zero(base, nvars, doc.order);
    s.set_q_half(doc.q_half);
    for t in doc.terms {
        if t.exps.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: t.exps.len(),
            });
        }
        let c: BigInt = t
            .coeff
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
        s.add_term(t.exps, c);
    }
    Ok(s)
}

/// One line per term: `k0<TAB>...<TAB>kl<TAB>coeff`.
pub fn to_tsv(s: &ExpSeries) -> String {
    let mut out = String::new();
    for (e, c) in s.terms() {
        for k in e {
            write!(out, "{k}\t").unwrap();
        }
        writeln!(out, "{c}").unwrap();
    }
    out
}

/// Human-readable rendering, one term per line as `coeff * e^{base} * x0^k0 ...`,
/// where `x_i = e^{-alpha_i}`; the legend is printed first.
pub fn to_pretty(s: &ExpSeries) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# x_i = e^(-alpha_i), alpha_0 = delta - theta, q = e^(-delta)"
    )
    .unwrap();
    writeln!(
        out,
        "# base e^({}), truncated above total height {}",
        s.base(),
        s.order()
    )
    .unwrap();
    for (e, c) in s.terms() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, k)| **k > 0)
            .map(|(i, k)| {
                if *k == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{k}")
                }
            })
            .collect();
        let mono = if mono.is_empty() {
            "1".to_string()
        } else {
            mono.join("*")
        };
        writeln!(out, "{c:>8}  {mono}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let base = AffineWeight::new(FiniteWeight(vec![Q::new(1, 2), q(-3)]), q(-1), Q::new(5, 2));
        let big: BigInt = "-123456789012345678901234567890".parse().unwrap();
        let s = ExpSeries::from_terms(
            base,
            3,
            7,
            [
                (vec![0, 0, 0], BigInt::from(1)),
                (vec![2, 1, 0], big),
                (vec![0, 3, 4], BigInt::from(-2)),
            ],
        );
        let text = to_json(&s);
        let back = from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(to_json(&back), text);
        assert!(text.find("[0,0,0]").unwrap() < text.find("[0,3,4]").unwrap());
    }

    #[test]
    fn tsv_has_one_line_per_term() {
        let s = ExpSeries::from_terms(
            AffineWeight::zero(1),
            2,
            3,
            [
                (vec![0, 0], BigInt::from(1)),
                (vec![0, 1], BigInt::from(-1)),
            ],
        );
        assert_eq!(to_tsv(&s), "0\t0\t1\n0\t1\t-1\n");
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        assert!(matches!(from_json("{}"), Err(Error::Parse(_))));
        assert!(matches!(
            from_json(
                r#"{"base":["x"],"level":"0","delta":"0","order":1,"q_half":false,"terms":[]}"#
            ),
            Err(Error::Parse(_))
        ));
    }
}
