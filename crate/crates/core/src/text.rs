//! Exact parsing and deterministic decimal printing.
//!
//! Accepted number grammar (for points, path entries and JSON coefficients):
//!
//! ```text
//!   value   := part | part sign part 'i' | part 'i' | sign? 'i'
//!   part    := sign? (INT ('/' INT)? | DECIMAL)
//!   DECIMAL := digits '.' digits ('e' sign? digits)?
//! ```
//!
//! Decimals convert exactly as written ("-0.99" is -99/100). Printing of
//! exact rationals is canonical ("3/4", "1/2+1/3i", "-i") and re-parses to
//! the same value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::gaussian::GaussianRational;
use crate::exact::num::{floor_log10_abs, pow10, round_nearest};

/// Parses a real rational: INT, INT/INT, or decimal notation.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let (sign, rest) = match s.as_bytes()[0] {
        b'+' => (1, &s[1..]),
        b'-' => (-1, &s[1..]),
        _ => (1, s),
    };
    let body = parse_unsigned_rational(rest)?;
    Ok(if sign < 0 { -body } else { body })
}

fn parse_unsigned_rational(s: &str) -> Result<BigRational> {
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(BigRational::new(n, d));
    }
    // decimal or plain integer, optional exponent
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("bad number {s:?}")));
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad number {s:?}")));
    }
    let n: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad number {s:?}")))?
    };
    let scale = frac_part.len() as i64 - exp;
    Ok(if scale >= 0 {
        BigRational::new(n, BigInt::from(10u32).pow(scale as u32))
    } else {
        BigRational::from_integer(n * BigInt::from(10u32).pow((-scale) as u32))
    })
}

/// Parses a Gaussian rational: "a", "a+bi", "a-bi", "bi", "i", "-i", with each
/// part an INT, INT/INT, or decimal.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // pure imaginary or complex: find the split sign (not at position 0,
        // not right after 'e'/'E')
        if let Some(pos) = split_sign_position(body) {
            let re = parse_rational(&body[..pos])?;
            let im_str = &body[pos..];
            let im = if im_str == "+" {
                BigRational::one()
            } else if im_str == "-" {
                -BigRational::one()
            } else {
                parse_rational(im_str)?
            };
            return Ok(GaussianRational::from_rationals(&re, &im));
        }
        let im = if body.is_empty() || body == "+" {
            BigRational::one()
        } else if body == "-" {
            -BigRational::one()
        } else {
            parse_rational(body)?
        };
        return Ok(GaussianRational::from_rationals(&BigRational::zero(), &im));
    }
    let re = parse_rational(&s)?;
    Ok(GaussianRational::from_rationals(&re, &BigRational::zero()))
}

/// Position of the sign separating real and imaginary parts, if any.
fn split_sign_position(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    for k in (1..bytes.len()).rev() {
        if bytes[k] == b'+' || bytes[k] == b'-' {
            let prev = bytes[k - 1];
            if prev == b'e' || prev == b'E' {
                continue;
            }
            return Some(k);
        }
    }
    None
}

/// Canonical exact form: "0", "3/4", "-1/2+2/3i", "i", "-5i".
pub fn format_gaussian(q: &GaussianRational) -> String {
    let re = q.re();
    let im = q.im();
    if im.is_zero() {
        return format_rational(&re);
    }
    let im_part = if im.abs() == BigRational::one() {
        if im.is_negative() { "-i".to_string() } else { "i".to_string() }
    } else {
        format!("{}i", format_rational(&im))
    };
    if re.is_zero() {
        return im_part;
    }
    if im.is_negative() {
        format!("{}{}", format_rational(&re), im_part)
    } else {
        format!("{}+{}", format_rational(&re), im_part)
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Decimal rendering of an exact real rational, rounded to the nearest
/// multiple of 10^-frac_digits. Fixed-point notation when the decimal
/// exponent lies in [-4, 20], normalized scientific otherwise, trailing
/// fractional zeros trimmed. Deterministic for identical inputs.
pub fn decimal_fixed(q: &BigRational, frac_digits: i64) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let e10 = floor_log10_abs(q);
    if (-4..=20).contains(&e10) {
        render_fixed(q, frac_digits)
    } else {
        // keep absolute precision: digits after the point in the mantissa
        let digits_after = (frac_digits + e10).max(0);
        render_scientific(q, digits_after)
    }
}

/// Decimal rendering with `sig` significant digits (normalized scientific
/// when outside the fixed-point exponent window).
pub fn decimal_significant(q: &BigRational, sig: i64) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let e10 = floor_log10_abs(q);
    if (-4..=20).contains(&e10) {
        render_fixed(q, sig - 1 - e10)
    } else {
        render_scientific(q, sig - 1)
    }
}

fn render_fixed(q: &BigRational, frac_digits: i64) -> String {
    let frac_digits = frac_digits.max(0);
    let scaled = q * pow10(frac_digits);
    let n = round_nearest(&scaled);
    let neg = n.is_negative();
    let digits = n.abs().to_string();
    let digits = if digits.len() as i64 <= frac_digits {
        format!("{}{}", "0".repeat((frac_digits + 1) as usize - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - frac_digits as usize;
    let (int_part, frac_part) = digits.split_at(split);
    let frac_part = frac_part.trim_end_matches('0');
    let body = if frac_part.is_empty() {
        int_part.to_string()
    } else {
        format!("{int_part}.{frac_part}")
    };
    if neg && body.trim_start_matches(['0', '.']).is_empty() {
        return "0".into();
    }
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn render_scientific(q: &BigRational, digits_after: i64) -> String {
    let digits_after = digits_after.max(0);
    let e10 = floor_log10_abs(q);
    let mantissa = q * pow10(-e10);
    // rounding can push the mantissa to 10.0; renormalize
    let scaled = round_nearest(&(&mantissa * pow10(digits_after)));
    let (scaled, e10) = {
        let limit = BigInt::from(10u32).pow(digits_after as u32 + 1);
        if scaled.abs() >= limit {
            (round_nearest(&(&mantissa * pow10(digits_after - 1))), e10 + 1)
        } else {
            (scaled, e10)
        }
    };
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    debug_assert!(digits.len() as i64 == digits_after + 1);
    let (head, tail) = digits.split_at(1);
    let tail = tail.trim_end_matches('0');
    let body = if tail.is_empty() {
        format!("{head}e{e10}")
    } else {
        format!("{head}.{tail}e{e10}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Complex decimal output "a+bi": the imaginary part is omitted when it is
/// certified zero at the requested precision (strictly smaller than half an
/// output unit together with the certification radius).
pub fn decimal_complex_fixed(
    re: &BigRational,
    im: &BigRational,
    frac_digits: i64,
    err: &BigRational,
) -> String {
    let half_unit = pow10(-frac_digits) / BigRational::from_integer(BigInt::from(2));
    let omit_im = im.abs() + err.clone() < half_unit;
    let re_str = decimal_fixed(re, frac_digits);
    if omit_im {
        return re_str;
    }
    let im_str = decimal_fixed(&im.abs(), frac_digits);
    let sign = if im.is_negative() { "-" } else { "+" };
    if re.abs() + err.clone() < half_unit {
        // drop a certified-zero real part too
        return format!("{}{}i", if im.is_negative() { "-" } else { "" }, im_str);
    }
    format!("{re_str}{sign}{im_str}i")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::num::rat;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_gaussian("3/4").unwrap(), GaussianRational::from_ratio(3, 4));
        assert_eq!(
            parse_gaussian("1/2+1/3i").unwrap(),
            GaussianRational::from_parts(3, 2, 6)
        );
        assert_eq!(parse_gaussian("-0.99").unwrap(), GaussianRational::from_ratio(-99, 100));
        assert_eq!(parse_gaussian("2i").unwrap(), GaussianRational::from_parts(0, 2, 1));
        assert_eq!(parse_gaussian("-i").unwrap(), GaussianRational::from_parts(0, -1, 1));
        assert_eq!(parse_gaussian("1+1i").unwrap(), GaussianRational::from_parts(1, 1, 1));
        assert_eq!(parse_gaussian("-1+1i").unwrap(), GaussianRational::from_parts(-1, 1, 1));
        assert_eq!(parse_gaussian("0").unwrap(), GaussianRational::zero());
        assert_eq!(
            parse_gaussian("1.5e2").unwrap(),
            GaussianRational::from_int(150)
        );
        assert!(parse_gaussian("").is_err());
        assert!(parse_gaussian("1/0").is_err());
        assert!(parse_gaussian("abc").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let cases = [
            GaussianRational::zero(),
            GaussianRational::from_int(7),
            GaussianRational::from_ratio(-3, 4),
            GaussianRational::from_parts(1, 1, 2),
            GaussianRational::from_parts(0, -5, 3),
            GaussianRational::from_parts(-2, -3, 7),
            GaussianRational::from_parts(0, 1, 1),
        ];
        for q in cases {
            let s = format_gaussian(&q);
            assert_eq!(parse_gaussian(&s).unwrap(), q, "round trip of {s}");
        }
    }

    #[test]
    fn fixed_rendering() {
        assert_eq!(decimal_fixed(&rat(1, 1), 10), "1");
        assert_eq!(decimal_fixed(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_fixed(&rat(-2, 3), 5), "-0.66667");
        assert_eq!(decimal_fixed(&rat(0, 1), 5), "0");
        // exponent below -4 switches to scientific but keeps absolute precision
        assert_eq!(decimal_fixed(&rat(1, 100000), 7), "1e-5");
        assert_eq!(decimal_fixed(&rat(123, 10000000), 9), "1.23e-5");
    }

    #[test]
    fn significant_rendering() {
        assert_eq!(decimal_significant(&rat(123456, 1000), 4), "123.5");
        assert_eq!(decimal_significant(&rat(2718281828459045235i64, 1000000000000000000i64), 10), "2.718281828");
        // 9.99 rounding to 2 digits renormalizes the exponent
        assert_eq!(decimal_significant(&rat(999, 100000000), 2), "1e-5");
    }

    #[test]
    fn complex_rendering() {
        let err = rat(1, 1000000);
        assert_eq!(decimal_complex_fixed(&rat(1, 2), &rat(0, 1), 4, &err), "0.5");
        assert_eq!(decimal_complex_fixed(&rat(1, 2), &rat(-1, 3), 4, &err), "0.5-0.3333i");
        assert_eq!(decimal_complex_fixed(&rat(0, 1), &rat(1, 3), 4, &err), "0.3333i");
        // imaginary part certified zero at this precision
        assert_eq!(decimal_complex_fixed(&rat(1, 2), &rat(1, 100000), 2, &err), "0.5");
    }
}
