//! Number formatting, CSV tables and gnuplot emission.

use std::fs;
use std::path::{Path, PathBuf};

use mbzeta::spectrostats::wigner_dyson_pdf;

use crate::Failure;

/// 17 significant digits, enough to round-trip any double.
pub fn sig17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

pub fn complex17(z: mbzeta::complex::Complex64) -> String {
    let sign = if z.im.is_sign_negative() { "" } else { "+" };
    format!("{}{sign}{}i", sig17(z.re), sig17(z.im))
}

/// CSV with `#` comment lines ahead of a header row.
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(comments: &[String], header: &[&str]) -> Self {
        let mut text = String::new();
        for c in comments {
            text.push_str("# ");
            text.push_str(c);
            text.push('\n');
        }
        text.push_str(&header.join(","));
        text.push('\n');
        Csv { text }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.text.push_str(&fields.join(","));
        self.text.push('\n');
    }

    pub fn comment(&mut self, line: &str) {
        self.text.push_str("# ");
        self.text.push_str(line);
        self.text.push('\n');
    }

    pub fn write(&self, path: &Path) -> Result<(), Failure> {
        write_text(path, &self.text)
    }
}

pub fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Failure::new(4, format!("cannot create {}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| Failure::new(4, format!("cannot write {}: {e}", path.display())))
}

const SPACING_BIN: f64 = 0.1;
const SPACING_BINS: usize = 40;

/// Writes histogram and pair-correlation data plus one gnuplot script for each.
pub fn write_plots(out: &Path, spacings: &[f64], pair_table: &[(f64, f64, f64)]) -> Result<Vec<PathBuf>, Failure> {
    let mut counts = [0usize; SPACING_BINS];
    for s in spacings {
        let k = (s / SPACING_BIN).floor();
        if k >= 0.0 && (k as usize) < SPACING_BINS {
            counts[k as usize] += 1;
        }
    }
    let norm = spacings.len().max(1) as f64 * SPACING_BIN;
    let mut hist = String::from("# s_mid density wigner_dyson\n");
    for (k, c) in counts.iter().enumerate() {
        let mid = (k as f64 + 0.5) * SPACING_BIN;
        hist.push_str(&format!("{} {} {}\n", sig17(mid), sig17(*c as f64 / norm), sig17(wigner_dyson_pdf(mid))));
    }
    let mut pairs = String::from("# omega r2_estimate sine_kernel\n");
    for (w, r, k) in pair_table {
        pairs.push_str(&format!("{} {} {}\n", sig17(*w), sig17(*r), sig17(*k)));
    }
    let spacing_script = "\
# gnuplot spacing.gp
# set terminal svg; set output 'spacing.svg'
set xlabel 's'
set ylabel 'P(s)'
set style fill transparent solid 0.4
plot 'spacing_hist.dat' using 1:2 with boxes title 'unfolded zeros', \\
     '' using 1:3 with lines lw 2 title 'Wigner-Dyson'
";
    let pair_script = "\
# gnuplot pair_correlation.gp
# set terminal svg; set output 'pair_correlation.svg'
set xlabel 'omega'
set ylabel 'R_2'
plot 'pair_correlation.dat' using 1:2 with linespoints title 'zeros', \\
     '' using 1:3 with lines lw 2 title '1 - (sin(pi w)/(pi w))^2'
";
    let files = [
        ("spacing_hist.dat", hist.as_str()),
        ("pair_correlation.dat", pairs.as_str()),
        ("spacing.gp", spacing_script),
        ("pair_correlation.gp", pair_script),
    ];
    let mut written = Vec::new();
    for (name, text) in files {
        let p = out.join(name);
        write_text(&p, text)?;
        written.push(p);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, std::f64::consts::PI, 1e-300, 12.041_897_809_4] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            assert_eq!(s.split('e').next().unwrap().replace(['.', '-'], "").len(), 17);
        }
    }

    #[test]
    fn csv_layout() {
        let mut c = Csv::new(&["note".into()], &["a", "b"]);
        c.row(&["1".into(), "2".into()]);
        assert_eq!(c.text, "# note\na,b\n1,2\n");
    }
}
