//! Base-60 numerals and the six-place token abacus.
//!
//! A numeral is a sequence of digits 0–59; the abacus realizes the six
//! lowest places as hexagonal figures of 60 token slots each, where a digit
//! is shown by filling that many slots and sixty tokens on one place reduce
//! to a single token on the next. Addition therefore carries exactly like a
//! decimal abacus.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::hexlattice::{build_packing, AxialCoord};
use crate::{Error, Result};

/// Number of places on the abacus.
pub const ABACUS_PLACES: usize = 6;

/// Smallest value the abacus cannot hold: 60⁶.
pub const ABACUS_CAPACITY: u64 = 46_656_000_000;

/// A base-60 numeral: digits 0–59, least-significant first, with no zero
/// in the most-significant position unless the numeral is exactly zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SexagesimalNumeral {
    digits: Vec<u8>,
}

/// Text notations for numerals.
///
/// Colon notation (`6:27:49`, most-significant first) is canonical; prime
/// notation separates digits with prime marks (`6′ 27′ 49`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Notation {
    Colon,
    Prime,
}

impl SexagesimalNumeral {
    /// Builds a numeral from digits given least-significant first.
    ///
    /// Digits must be at most 59; zeros in the high places are trimmed.
    pub fn new(mut digits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&d| d > 59) {
            return Err(Error::Domain(format!(
                "digit {bad} out of range (a base-60 digit is 0..=59)"
            )));
        }
        while digits.len() > 1 && *digits.last().unwrap() == 0 {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(SexagesimalNumeral { digits })
    }

    pub fn zero() -> Self {
        SexagesimalNumeral { digits: vec![0] }
    }

    /// Digits, least-significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    /// Value of the numeral: Σ digitᵢ·60^i.
    ///
    /// Panics if the value exceeds `u128` (23 or more places).
    pub fn to_decimal(&self) -> u128 {
        let mut value: u128 = 0;
        let mut weight: u128 = 1;
        for (i, &d) in self.digits.iter().enumerate() {
            value = u128::from(d)
                .checked_mul(weight)
                .and_then(|v| value.checked_add(v))
                .expect("numeral value exceeds u128");
            if i + 1 < self.digits.len() {
                weight = weight.checked_mul(60).expect("numeral value exceeds u128");
            }
        }
        value
    }

    /// Numeral for a non-negative value.
    pub fn from_decimal(mut value: u128) -> Self {
        let mut digits = Vec::new();
        loop {
            digits.push((value % 60) as u8);
            value /= 60;
            if value == 0 {
                break;
            }
        }
        SexagesimalNumeral { digits }
    }

    /// Renders the numeral most-significant first in the given notation.
    pub fn format(&self, notation: Notation) -> String {
        let separator = match notation {
            Notation::Colon => ":",
            Notation::Prime => "\u{2032} ",
        };
        self.digits
            .iter()
            .rev()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(separator)
    }
}

impl fmt::Display for SexagesimalNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Notation::Colon))
    }
}

impl FromStr for SexagesimalNumeral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_numeral(s)
    }
}

/// Parses a numeral in colon notation (`6:27:49`) or prime notation
/// (`6′ 27′ 49`, runs of one or two prime marks as separators, a trailing
/// mark allowed), most-significant first.
pub fn parse_numeral(text: &str) -> Result<SexagesimalNumeral> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty numeral".to_string()));
    }
    let tokens: Vec<&str> = if trimmed.contains(':') {
        trimmed.split(':').map(str::trim).collect()
    } else {
        split_prime_notation(trimmed)?
    };
    let mut digits_msd = Vec::with_capacity(tokens.len());
    for token in tokens {
        if token.is_empty() {
            return Err(Error::Parse(format!(
                "empty digit in numeral \"{trimmed}\""
            )));
        }
        let value: u32 = token
            .parse()
            .map_err(|_| Error::Parse(format!("\"{token}\" is not a base-60 digit")))?;
        if value > 59 {
            return Err(Error::Parse(format!(
                "digit {value} out of range (a base-60 digit is 0..=59)"
            )));
        }
        digits_msd.push(value as u8);
    }
    digits_msd.reverse();
    SexagesimalNumeral::new(digits_msd)
}

/// Splits prime notation into digit tokens. Accepts `'` and `′`, in runs of
/// one or two marks; whitespace around marks is ignored.
fn split_prime_notation(text: &str) -> Result<Vec<&str>> {
    let is_prime = |c: char| c == '\'' || c == '\u{2032}';
    let mut tokens = Vec::new();
    let mut start = 0;
    let mut marks_in_run = 0usize;
    for (i, c) in text.char_indices() {
        if is_prime(c) {
            if marks_in_run == 0 {
                tokens.push(text[start..i].trim());
                start = i + c.len_utf8();
            } else {
                start = i + c.len_utf8();
            }
            marks_in_run += 1;
            if marks_in_run > 2 {
                return Err(Error::Parse(
                    "more than two prime marks in a row".to_string(),
                ));
            }
        } else if !c.is_whitespace() {
            marks_in_run = 0;
        }
    }
    let tail = text[start..].trim();
    if !tail.is_empty() {
        tokens.push(tail);
    }
    if tokens.is_empty() {
        return Err(Error::Parse("no digits in numeral".to_string()));
    }
    Ok(tokens)
}

/// The abacus: six token counts, least-significant place first, each 0–59
/// when normalized.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AbacusState {
    places: [u8; ABACUS_PLACES],
}

/// What happened on one place during an addition: the token count before
/// the reduction step and whether one token carried to the next place.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CarryStep {
    pub place: usize,
    pub before: u8,
    pub carry_out: bool,
}

impl AbacusState {
    /// Builds a normalized state; every place must be at most 59.
    pub fn new(places: [u8; ABACUS_PLACES]) -> Result<Self> {
        if let Some(&bad) = places.iter().find(|&&p| p > 59) {
            return Err(Error::Domain(format!(
                "place holds {bad} tokens; a normalized place holds 0..=59"
            )));
        }
        Ok(AbacusState { places })
    }

    pub fn zero() -> Self {
        AbacusState {
            places: [0; ABACUS_PLACES],
        }
    }

    /// State representing `value`; errors when `value` needs a seventh place.
    pub fn from_value(value: u64) -> Result<Self> {
        if value >= ABACUS_CAPACITY {
            return Err(Error::Overflow(format!(
                "{value} does not fit the {ABACUS_PLACES}-place abacus (max {})",
                ABACUS_CAPACITY - 1
            )));
        }
        let mut places = [0u8; ABACUS_PLACES];
        let mut v = value;
        for place in places.iter_mut() {
            *place = (v % 60) as u8;
            v /= 60;
        }
        Ok(AbacusState { places })
    }

    pub fn from_numeral(numeral: &SexagesimalNumeral) -> Result<Self> {
        if numeral.digits().len() > ABACUS_PLACES {
            return Err(Error::Overflow(format!(
                "numeral {numeral} has {} places; the abacus has {ABACUS_PLACES}",
                numeral.digits().len()
            )));
        }
        let mut places = [0u8; ABACUS_PLACES];
        places[..numeral.digits().len()].copy_from_slice(numeral.digits());
        Ok(AbacusState { places })
    }

    pub fn to_numeral(&self) -> SexagesimalNumeral {
        SexagesimalNumeral::new(self.places.to_vec()).expect("places are normalized")
    }

    /// Value of the state: Σ placesᵢ·60^i.
    pub fn value(&self) -> u64 {
        self.places
            .iter()
            .rev()
            .fold(0u64, |acc, &p| acc * 60 + u64::from(p))
    }

    pub fn places(&self) -> [u8; ABACUS_PLACES] {
        self.places
    }

    /// Slot fill of one place; see [`abacus_layout`].
    pub fn place_layout(&self, place: usize) -> Result<Vec<bool>> {
        if place >= ABACUS_PLACES {
            return Err(Error::Domain(format!(
                "place {place} out of range (the abacus has {ABACUS_PLACES} places)"
            )));
        }
        abacus_layout(self.places[place])
    }
}

impl fmt::Display for AbacusState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_numeral())
    }
}

/// Adds two normalized states, reducing sixty tokens on a place to one
/// token on the next. Returns the normalized sum and the per-place trace.
///
/// Errors when the sum needs a seventh place.
pub fn abacus_add(a: &AbacusState, b: &AbacusState) -> Result<(AbacusState, Vec<CarryStep>)> {
    let mut places = [0u8; ABACUS_PLACES];
    let mut trace = Vec::with_capacity(ABACUS_PLACES);
    let mut carry = 0u8;
    for (place, slot) in places.iter_mut().enumerate() {
        let before = a.places[place] + b.places[place] + carry;
        let carry_out = before >= 60;
        *slot = if carry_out { before - 60 } else { before };
        trace.push(CarryStep {
            place,
            before,
            carry_out,
        });
        carry = u8::from(carry_out);
    }
    if carry != 0 {
        return Err(Error::Overflow(format!(
            "{} + {} exceeds the {ABACUS_PLACES}-place abacus",
            a.to_numeral(),
            b.to_numeral()
        )));
    }
    Ok((AbacusState { places }, trace))
}

/// Slot fill for one displayed digit: exactly `place_digit` of the 60 slots
/// are filled, as a prefix of the fixed slot order.
pub fn abacus_layout(place_digit: u8) -> Result<Vec<bool>> {
    if place_digit > 59 {
        return Err(Error::Domain(format!(
            "digit {place_digit} cannot be displayed; sixty tokens carry to the next place"
        )));
    }
    Ok((0..60)
        .map(|slot| slot < usize::from(place_digit))
        .collect())
}

/// The fixed slot order of one abacus place: the 60 non-central discs of
/// the rank-4 packing, rank-major then wedge-major.
pub fn slot_order() -> Vec<AxialCoord> {
    build_packing(4)
        .expect("rank 4 is within the cap")
        .discs()
        .iter()
        .skip(1)
        .map(|d| d.center)
        .collect()
}

/// Carry trace as a JSON array of `{place, before, carry_out}` objects.
pub fn carry_trace_json(trace: &[CarryStep]) -> String {
    serde_json::to_string(trace).expect("trace serialization cannot fail")
}
