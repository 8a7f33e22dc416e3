//! Reading knots and braids from files, catalog names or inline text.

use crate::commands::CliError;
use crate::SatelliteArgs;
use std::fs;
use std::path::Path;
use thinwidth::morse::parse_morse;
use thinwidth::satellite::parse_braid;
use thinwidth::{catalog, validate, BraidWord, MorsePresentation, SatelliteSpec};

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn morse_file(path: &Path) -> Result<MorsePresentation, CliError> {
    let events = parse_morse(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    validate(events).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// A catalog entry by name, otherwise a .morse file.
pub fn knot(spec: &str) -> Result<MorsePresentation, CliError> {
    if let Some(entry) = catalog::get(spec) {
        return Ok(entry.presentation());
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Io(format!("`{spec}` is neither a file nor a catalog entry")));
    }
    morse_file(path)
}

/// A .braid file if the argument names one, otherwise inline braid text.
pub fn braid(spec: &str) -> Result<BraidWord, CliError> {
    let path = Path::new(spec);
    let text = if path.is_file() { read(path)? } else { spec.to_string() };
    parse_braid(&text).map_err(|e| CliError::Parse(format!("braid: {e}")))
}

pub fn satellite_spec(args: &SatelliteArgs) -> Result<SatelliteSpec, CliError> {
    let companion = knot(&args.companion)?;
    if companion.bridge_count() < 2 && !args.allow_trivial {
        return Err(CliError::Domain(format!(
            "companion `{}` has a single maximum, so it is an unknot; pass --allow-trivial to use it anyway",
            args.companion
        )));
    }
    let spec = SatelliteSpec::new(companion, braid(&args.braid)?)
        .with_framing(args.framing)
        .with_site(args.site);
    spec.check().map_err(CliError::from)?;
    Ok(spec)
}
