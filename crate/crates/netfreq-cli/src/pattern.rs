//! Pattern argument parsing: literal bytes with `\xHH` escapes.

/// Decodes a pattern argument. Characters are taken as their UTF-8 bytes;
/// `\xHH` inserts the byte `0xHH`. No other escapes exist, so a backslash
/// must always introduce one.
pub fn parse_pattern(s: &str) -> Result<Vec<u8>, String> {
    let bytes = s.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'\\' {
            if i + 4 <= bytes.len() && bytes[i + 1] == b'x' {
                let hex = std::str::from_utf8(&bytes[i + 2..i + 4]).map_err(|_| bad(s, i))?;
                let v = u8::from_str_radix(hex, 16).map_err(|_| bad(s, i))?;
                out.push(v);
                i += 4;
            } else {
                return Err(bad(s, i));
            }
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    Ok(out)
}

fn bad(s: &str, i: usize) -> String {
    format!("invalid escape in pattern {:?} at byte {} (only \\xHH is supported)", s, i)
}
