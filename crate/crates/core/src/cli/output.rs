use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;

/// Environment variable overriding the output directory.
pub const OUT_DIR_VAR: &str = "SURFWAVE_OUT_DIR";
/// Environment variable fixing the worker thread count.
pub const THREADS_VAR: &str = "SURFWAVE_THREADS";

/// Writes every float with 17 significant digits so reruns are byte-identical.
struct FixedDigits;

impl serde_json::ser::Formatter for FixedDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Serializes to compact JSON with fixed float formatting.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedDigits);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

pub fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut text = to_json(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Output directory: command-line flag, then environment, then config, then `out`.
pub fn resolve_out_dir(flag: Option<&Path>, config: Option<&Path>) -> Result<PathBuf> {
    let dir = match (flag, std::env::var_os(OUT_DIR_VAR), config) {
        (Some(f), _, _) => f.to_path_buf(),
        (None, Some(env), _) if !env.is_empty() => PathBuf::from(env),
        (None, _, Some(c)) => c.to_path_buf(),
        _ => PathBuf::from("out"),
    };
    std::fs::create_dir_all(&dir)?;
    Ok(dir)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        let json = to_json(&serde_json::json!({"x": 0.1, "y": 1.0, "n": 3, "z": f64::NAN})).unwrap();
        assert_eq!(json, r#"{"n":3,"x":1.0000000000000001e-1,"y":1.0000000000000000e0,"z":null}"#);
    }
}
