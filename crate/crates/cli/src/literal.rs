//! Complex literals of the form `[-]ddd[.ddd][(+|-)ddd[.ddd]i]`.

use hilbert_disk::Point;

/// Consumes an unsigned decimal `ddd[.ddd]` from the front of `s`.
fn decimal(s: &str) -> Option<(f64, &str)> {
    let int_len = s.bytes().take_while(u8::is_ascii_digit).count();
    if int_len == 0 {
        return None;
    }
    let mut len = int_len;
    if s[len..].starts_with('.') {
        let frac_len = s[len + 1..].bytes().take_while(u8::is_ascii_digit).count();
        if frac_len == 0 {
            return None;
        }
        len += 1 + frac_len;
    }
    Some((s[..len].parse().ok()?, &s[len..]))
}

pub fn parse_complex(text: &str) -> Result<Point, String> {
    let bad = || format!("`{text}` is not a complex literal like 0.5, -0.2 or 0.5-0.1i");
    let (negative, rest) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (re, rest) = decimal(rest).ok_or_else(bad)?;
    let re = if negative { -re } else { re };
    if rest.is_empty() {
        return Ok(Point::new(re, 0.0));
    }
    let (sign, rest) = match rest.as_bytes()[0] {
        b'+' => (1.0, &rest[1..]),
        b'-' => (-1.0, &rest[1..]),
        _ => return Err(bad()),
    };
    let (im, rest) = decimal(rest).ok_or_else(bad)?;
    if rest != "i" {
        return Err(bad());
    }
    Ok(Point::new(re, sign * im))
}
