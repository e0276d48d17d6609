use super::{design_of_theta, Design, FiniteDesign, PeriodicDesign};
use crate::error::{Error, Result};

fn bits_of(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Syntax(format!("unexpected character {other:?}"))),
        })
        .collect()
}

/// Parses `[01]*`, `1 0* t` (terminal) or `[01]* '(' [01]+ ')'`.
///
/// Periodic input is canonicalized; a constant period denotes a dyadic
/// decimal and yields the corresponding reduced finite design.
pub fn parse_design(text: &str) -> Result<Design> {
    let text = text.trim();
    if let Some(open) = text.find('(') {
        let inner = text[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::Syntax("period must end with ')'".into()))?;
        if inner.is_empty() {
            return Err(Error::Syntax("empty period".into()));
        }
        let pre = bits_of(&text[..open])?;
        let period = bits_of(inner)?;
        return match PeriodicDesign::canonical(pre.clone(), period.clone()) {
            Ok(p) => Ok(p.into()),
            Err(Error::InvalidPeriod(_)) => {
                // 0.w(0) = 0.w and 0.w(1) = 0.w + 2^{-k}
                let d = FiniteDesign::from_bits(pre);
                let t = if period[0] {
                    d.compose(&FiniteDesign::terminal(0))?.theta()
                } else {
                    d.theta()
                };
                Ok(design_of_theta(&t))
            }
            Err(e) => Err(e),
        };
    }
    if text.contains(')') {
        return Err(Error::Syntax("unbalanced ')'".into()));
    }
    if let Some(word) = text.strip_suffix('t') {
        let bits = bits_of(word)?;
        return match bits.split_first() {
            Some((true, zeros)) if zeros.iter().all(|b| !b) => {
                Ok(FiniteDesign::terminal(zeros.len()).into())
            }
            _ => Err(Error::Syntax(format!(
                "terminal design must be 1 followed by zeros, got {word:?}"
            ))),
        };
    }
    Ok(FiniteDesign::from_bits(bits_of(text)?).into())
}
