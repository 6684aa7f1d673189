use serde_json::{json, Map, Value};
use zetakit::ComplexValue;

/// Decimal string with 15 significant digits; scientific outside
/// `1e-5 ≤ |x| < 1e15`.
pub fn real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.14e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let split = exp as usize + 1;
        let (int, frac) = digits.split_at(split);
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    format!("{sign}{body}")
}

pub fn num<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

pub fn real_v(x: f64) -> Value {
    Value::String(real(x))
}

pub fn complex_v(z: ComplexValue) -> Value {
    json!([real(z.re), real(z.im)])
}

pub fn complex(z: ComplexValue) -> String {
    format!("{} + {}i", real(z.re), real(z.im))
}

pub fn nums<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| num(x.to_string())).collect())
}

pub fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

/// Left-aligned text table.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(headers.to_vec())];
    out.push(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
    for row in rows {
        out.push(line(row.iter().map(String::as_str).collect()));
    }
    out.join("\n")
}

/// `key: value` lines.
pub fn fields(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<w$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(real(1.172357308844733), "1.17235730884473");
        assert_eq!(real(2271.0), "2271.00000000000");
        assert_eq!(real(-0.00125), "-0.00125000000000000");
        assert_eq!(real(1e-7), "1.00000000000000e-7");
        assert_eq!(real(-0.0), "0");
        assert_eq!(real(123456789012345.0), "123456789012345");
        assert_eq!(real(1e15), "1.00000000000000e15");
    }

    #[test]
    fn table_layout() {
        let t = table(&["n", "N_n"], &[vec!["1".into(), "3".into()], vec!["7".into(), "2271".into()]]);
        assert_eq!(t, "n  N_n\n-  ----\n1  3\n7  2271");
    }
}
