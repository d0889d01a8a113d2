//! The `map` command: applies one bijection, forward or inverse, to text.
//!
//! Plain maps read and write composition text. Maps between unions carry a
//! tag in front of the composition:
//!
//! | map          | forward input      | forward output |
//! |--------------|--------------------|----------------|
//! | `ufix`       | `n-2:C`, `n-3:C`   | `C`            |
//! | `vfix`       | `n-2:C`, `n-4:C`   | `C`            |
//! | `evenstep`   | `even:C`, `shift:C`| `copy1:C`, `copy2:C` |
//!
//! The inverse direction swaps input and output forms.

use complab::bijection::{
    arndt_to_odd, even_length_step, even_length_step_inverse, odd_length_step, odd_to_arndt,
    u_fixed_expand, u_fixed_reduce, u_forward, u_inverse, v_fixed_append, v_fixed_expand,
    v_fixed_reduce, v_fixed_trim, v_forward, v_inverse, BijectionError, CopyIndex, Direction,
    SplitOrigin, SplitSource, TwoCopyElement, UFixedSource, VFixedSource,
};
use complab::verify::MapId;
use complab::{membership_violation, Composition, FamilyId, TextStyle};

use crate::CliError;

/// A parsed input: optional tag, composition and the text style it used.
struct Input {
    tag: Option<String>,
    value: Composition,
    style: TextStyle,
}

fn parse_input(text: &str) -> Result<Input, CliError> {
    let (tag, body) = match text.split_once(':') {
        Some((tag, body)) => (Some(tag.trim().to_string()), body),
        None => (None, text),
    };
    let (value, style) = Composition::parse_with_style(body)?;
    Ok(Input { tag, value, style })
}

fn tagged(tag: &str, c: &Composition, style: TextStyle) -> String {
    format!("{tag}:{}", c.to_text(style))
}

fn need_k(map: MapId, k: Option<i64>) -> Result<i64, CliError> {
    k.ok_or_else(|| CliError::Usage(format!("{map} needs --k")))
}

fn expect_tag<'a>(input: &'a Input, map: MapId, allowed: &[&str]) -> Result<&'a str, CliError> {
    match input.tag.as_deref() {
        Some(t) if allowed.contains(&t) => Ok(t),
        Some(t) => Err(CliError::Usage(format!(
            "{map}: unknown tag {t:?}; expected one of {}",
            allowed.join(", ")
        ))),
        None => Err(CliError::Usage(format!(
            "{map}: input needs a tag, one of {}",
            allowed.join(", ")
        ))),
    }
}

fn expect_plain(input: &Input, map: MapId) -> Result<(), CliError> {
    match &input.tag {
        None => Ok(()),
        Some(t) => Err(CliError::Usage(format!("{map}: unexpected tag {t:?}"))),
    }
}

fn require(map: MapId, c: &Composition, family: FamilyId) -> Result<(), CliError> {
    match membership_violation(c, family) {
        None => Ok(()),
        Some(reason) => Err(BijectionError::Domain {
            map: map.name(),
            input: c.to_string(),
            reason: format!("not in {family}: {reason}"),
        }
        .into()),
    }
}

/// Applies `map` (or its inverse) to `text` and returns the image as text in
/// the same style as the input.
pub fn apply(map: MapId, text: &str, inverse: bool, k: Option<i64>) -> Result<String, CliError> {
    let input = parse_input(text)?;
    let style = input.style;
    let c = &input.value;
    let plain = |out: Composition| out.to_text(style);
    match (map, inverse) {
        (MapId::EvenLengthStep, false) => {
            let k = need_k(map, k)?;
            let origin = match expect_tag(&input, map, &["even", "shift"])? {
                "even" => SplitOrigin::EvenPart,
                _ => SplitOrigin::ShiftPart,
            };
            let out = even_length_step(
                &SplitSource {
                    origin,
                    value: c.clone(),
                },
                k,
            )?;
            Ok(tagged(
                &format!("copy{}", out.copy.number()),
                &out.value,
                style,
            ))
        }
        (MapId::EvenLengthStep, true) => {
            let k = need_k(map, k)?;
            let copy = match expect_tag(&input, map, &["copy1", "copy2"])? {
                "copy1" => CopyIndex::First,
                _ => CopyIndex::Second,
            };
            let element = TwoCopyElement {
                copy,
                value: c.clone(),
            };
            let src = even_length_step_inverse(&element, k, c.n() + 2)?;
            let tag = match src.origin {
                SplitOrigin::EvenPart => "even",
                SplitOrigin::ShiftPart => "shift",
            };
            Ok(tagged(tag, &src.value, style))
        }
        (MapId::UFixedExpand, false) => {
            let src = match expect_tag(&input, map, &["n-2", "n-3"])? {
                "n-2" => UFixedSource::TwoLess(c.clone()),
                _ => UFixedSource::ThreeLess(c.clone()),
            };
            Ok(plain(u_fixed_expand(&src)?))
        }
        (MapId::UFixedExpand, true) => {
            expect_plain(&input, map)?;
            Ok(match u_fixed_reduce(c)? {
                UFixedSource::TwoLess(v) => tagged("n-2", &v, style),
                UFixedSource::ThreeLess(v) => tagged("n-3", &v, style),
            })
        }
        (MapId::VFixedExpand, false) => {
            let src = match expect_tag(&input, map, &["n-2", "n-4"])? {
                "n-2" => VFixedSource::TwoLess(c.clone()),
                _ => VFixedSource::FourLess(c.clone()),
            };
            Ok(plain(v_fixed_expand(&src)?))
        }
        (MapId::VFixedExpand, true) => {
            expect_plain(&input, map)?;
            Ok(match v_fixed_reduce(c)? {
                VFixedSource::TwoLess(v) => tagged("n-2", &v, style),
                VFixedSource::FourLess(v) => tagged("n-4", &v, style),
            })
        }
        _ => {
            expect_plain(&input, map)?;
            Ok(plain(apply_plain(map, c, inverse, k)?))
        }
    }
}

fn apply_plain(
    map: MapId,
    c: &Composition,
    inverse: bool,
    k: Option<i64>,
) -> Result<Composition, CliError> {
    let out = match (map, inverse) {
        (MapId::ArndtToOdd, false) => arndt_to_odd(c)?,
        (MapId::ArndtToOdd, true) => odd_to_arndt(c)?,
        (MapId::U, false) => u_forward(c),
        (MapId::U, true) => u_inverse(c),
        (MapId::V, false) => v_forward(c),
        (MapId::V, true) => v_inverse(c),
        (MapId::Restricted, _) => {
            let k = need_k(map, k)?;
            let partner = FamilyId::restricted_partner(k)
                .ok_or_else(|| CliError::Usage(format!("{map} needs k < 0, got {k}")))?;
            let even_k = k % 2 == 0;
            if inverse {
                require(map, c, partner)?;
                if even_k {
                    u_inverse(c)
                } else {
                    v_inverse(c)
                }
            } else {
                require(map, c, FamilyId::Arndt(k))?;
                if even_k {
                    u_forward(c)
                } else {
                    v_forward(c)
                }
            }
        }
        (MapId::VFixedAppend, false) => v_fixed_append(c)?,
        (MapId::VFixedAppend, true) => v_fixed_trim(c)?,
        (MapId::OddLengthStep, _) => {
            let k = need_k(map, k)?;
            let direction = if inverse {
                Direction::Inverse
            } else {
                Direction::Forward
            };
            odd_length_step(c, k, direction)?
        }
        (MapId::EvenLengthStep | MapId::UFixedExpand | MapId::VFixedExpand, _) => {
            unreachable!("tagged maps are handled by apply")
        }
    };
    Ok(out)
}
