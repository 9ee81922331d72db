//! Opaque generator parameters, compared by exact equality.

use alloc::string::String;
use core::fmt;

use crate::linalg::Rational;

/// Index of a generator in a parameterised family.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Param {
    Rational(Rational),
    /// Exact complex number `re + im·i`.
    Complex(Rational, Rational),
    Token(String),
}

impl Param {
    pub fn sort(&self) -> crate::signature::ParamSort {
        use crate::signature::ParamSort;
        match self {
            Param::Rational(_) => ParamSort::Rational,
            Param::Complex(..) => ParamSort::Complex,
            Param::Token(_) => ParamSort::Token,
        }
    }

    pub fn int(n: i64) -> Self {
        Param::Rational(Rational::from_integer(n.into()))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Rational(q) => write!(f, "{q}"),
            Param::Complex(re, im) => {
                use num_traits::Signed;
                if im.is_negative() {
                    write!(f, "{re}-{}i", -im)
                } else {
                    write!(f, "{re}+{im}i")
                }
            }
            Param::Token(t) if is_identifier(t) => f.write_str(t),
            Param::Token(t) => {
                f.write_str("\"")?;
                for c in t.chars() {
                    if c == '"' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\"")
            }
        }
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
