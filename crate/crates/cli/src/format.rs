use std::str::FromStr;

/// `%.12g`: 12 significant digits, trailing zeros trimmed.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        trim(&format!("{x:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mantissa), exp.abs())
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `start:end:step` sweep over p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PRange {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl PRange {
    /// `start + i*step` up to `end`, which is included when it lies on the grid
    /// up to rounding.
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.end - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

impl FromStr for PRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(format!("expected start:end:step, got {s:?}"));
        };
        let num = |t: &str| match t.trim().parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            Ok(x) => Err(format!("{x} is not finite")),
            Err(e) => Err(format!("{t:?}: {e}")),
        };
        let r = PRange { start: num(a)?, end: num(b)?, step: num(c)? };
        if r.step <= 0.0 {
            return Err("step must be positive".into());
        }
        if r.start > r.end {
            return Err("start must not exceed end".into());
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(0.0005), "0.0005");
        assert_eq!(sig12(0.958440999999999), "0.958441");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(-2.5e-7), "-2.5e-07");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e+14");
    }

    #[test]
    fn sweep_grid() {
        let r: PRange = "0:0.026:0.0005".parse().unwrap();
        let ps = r.points();
        assert_eq!(ps.len(), 53);
        assert!((ps[52] - 0.026).abs() < 1e-15);
        assert!("0:1".parse::<PRange>().is_err());
        assert!("0:1:0".parse::<PRange>().is_err());
        assert!("1:0:0.1".parse::<PRange>().is_err());
    }
}
