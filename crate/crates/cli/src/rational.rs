//! Exact parsing of rational literals: `p/q` or decimal strings.

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Parses "p/q" or a decimal literal into an exact rational; a decimal with
/// k fraction digits becomes p / 10^k. No floating point involved.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().context("bad numerator")?;
        let den: BigInt = q.trim().parse().context("bad denominator")?;
        if den.is_zero() {
            bail!("zero denominator");
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            bail!("bad decimal literal '{s}'");
        }
        let negative = int_part.starts_with('-');
        let int_abs = int_part.trim_start_matches(['-', '+']);
        let int_val: BigInt = if int_abs.is_empty() {
            BigInt::zero()
        } else {
            int_abs.parse().context("bad integer part")?
        };
        let frac_val: BigInt = frac_part.parse().context("bad fraction part")?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = BigRational::new(int_val * &scale + frac_val, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let int: BigInt = s.parse().with_context(|| format!("bad rational '{s}'"))?;
    Ok(BigRational::from_integer(int))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("9/625").unwrap(), BigRational::new(9.into(), 625.into()));
        assert_eq!(
            parse_rational("0.0144").unwrap(),
            BigRational::new(144.into(), 10000.into())
        );
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-0.5").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.2e3").is_err());
    }
}
