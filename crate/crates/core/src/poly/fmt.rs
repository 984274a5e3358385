//! Canonical printer: terms in descending ambient lex order, `*` and `^`
//! explicit, rational coefficients as `n/d`. `parse(print(p)) == p`.

use std::fmt;

use num_traits::{One, Signed};

use super::MPoly;

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, coeff) in self.terms.iter().rev() {
            let neg = coeff.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in expo.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k == 1 {
                    factors.push(self.table.name(i).to_string());
                } else {
                    factors.push(format!("{}^{}", self.table.name(i), k));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::parse_poly;
    use crate::vars::VarTable;

    #[test]
    fn print_descending_lex() {
        let t = VarTable::standard();
        let p = parse_poly(&t, "t2 - 1/2 + t1^2*t2 + t1^3").unwrap();
        assert_eq!(p.to_string(), "t1^3 + t1^2*t2 + t2 - 1/2");
    }

    #[test]
    fn roundtrip() {
        let t = VarTable::standard();
        for s in ["0", "-t1 + t2", "3/7*t1^2*h1 - t3", "h1^2 + h1*t1 + t1^2"] {
            let p = parse_poly(&t, s).unwrap();
            assert_eq!(parse_poly(&t, &p.to_string()).unwrap(), p);
        }
    }
}
