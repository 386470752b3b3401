use std::path::PathBuf;

use serde::Serialize;
use spherelab::svg::Scene;

use crate::params::{Format, Params};
use crate::CliError;

/// Float formatting shared by every CSV file: 17 significant digits.
pub fn f(v: f64) -> String {
    format!("{v:.16e}")
}

pub struct Output {
    dir: PathBuf,
    formats: Vec<Format>,
}

impl Output {
    pub fn new(params: &Params) -> Result<Self, CliError> {
        let dir = params.out.clone().unwrap_or_else(|| PathBuf::from("."));
        std::fs::create_dir_all(&dir)
            .map_err(|e| CliError::Config(format!("cannot create {}: {e}", dir.display())))?;
        let formats = params
            .format
            .clone()
            .unwrap_or_else(|| vec![Format::Csv, Format::Json, Format::Svg]);
        Ok(Self { dir, formats })
    }

    fn write(&self, name: &str, contents: &[u8]) -> Result<(), CliError> {
        let path = self.dir.join(name);
        std::fs::write(&path, contents).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
    }

    pub fn csv(&self, name: &str, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), CliError> {
        if !self.formats.contains(&Format::Csv) {
            return Ok(());
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Io(e.to_string());
        w.write_record(header).map_err(io)?;
        for row in rows {
            w.write_record(&row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
        self.write(name, &bytes)
    }

    pub fn json<T: Serialize>(&self, name: &str, value: &T) -> Result<(), CliError> {
        if !self.formats.contains(&Format::Json) {
            return Ok(());
        }
        let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
        text.push('\n');
        self.write(name, text.as_bytes())
    }

    pub fn svg(&self, name: &str, scene: &Scene) -> Result<(), CliError> {
        if !self.formats.contains(&Format::Svg) {
            return Ok(());
        }
        self.write(name, scene.render().as_bytes())
    }
}
