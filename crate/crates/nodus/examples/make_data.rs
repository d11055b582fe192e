//! Writes the synthetic sample data set: `cargo run -p nodus --example make_data -- DIR`.

use std::path::{Path, PathBuf};

use nodus::io::config::LayoutConfig;
use nodus::io::reaction::{EventFile, GainsFile};
use nodus::io::{frames, geometry, material, write_bytes, write_csv, write_json};
use nodus::Result;
use nodus_core::blurvision::{synth_frames, SynthConfig};
use nodus_core::demo;
use nodus_core::metrics::Metric;
use nodus_core::reaction::Gains;

fn blade_files(dir: &Path) -> Result<()> {
    let blade = demo::blade();
    geometry::write_sections(&dir.join("blade.csv"), blade.sections())?;
    geometry::write_camber(&dir.join("section.csv"), &demo::nodus_camber())?;
    for (name, spec) in ["ds10", "ds20", "ds30"].iter().zip(demo::soft_composites()) {
        write_bytes(&dir.join(format!("{name}.txt")), material::format_composite(&spec).as_bytes())?;
    }
    let layout = serde_json::to_string(&LayoutConfig::from(*blade.layout())).expect("layout serializes");
    let config = format!(
        r#"{{
  "geometry_csv": "blade.csv",
  "section_csv": "section.csv",
  "material": "ds10.txt",
  "layout": {layout},
  "rho_kg_m3": 1.225,
  "sweep_rpm": {{ "start": 500.0, "stop": 12000.0, "step": 100.0 }}
}}
"#
    );
    write_bytes(&dir.join("config.json"), config.as_bytes())
}

fn frame_sets(dir: &Path) -> Result<()> {
    // noise-free so the PNGs stay small
    let cfg = SynthConfig::example(10f64.to_radians(), 0.0, 7);
    let (stack, _) = synth_frames(&cfg).expect("example renders");
    frames::write_stack(&dir.join("frames_beta10"), &stack, true)
}

fn reaction_files(dir: &Path) -> Result<()> {
    let ev = EventFile { x_c_m: [0.0, 1.7, -2.0], v_pre_m_s: [0.0, 1.0, 0.0], t_c_s: 0.0, outage_s: 0.46, d_r_m: 0.8 };
    write_json(&dir.join("event.json"), &ev)?;
    write_json(&dir.join("gains.json"), &GainsFile::from(Gains::default()))
}

const CHARACTERISTICS: &str = "\
config,thrust_n,thrust_dev_n,collision_force_n,recovery_time_s,eps_lod,noise_db
0,0.658,0.11,269.3,,1.776,49.4
5,0.656,0.03,147.3,0.63,2.0822,49.1
6,0.537,0.14,93.7,0.55,2.0718,51
7,0.631,0.04,81.5,0.32,2.0652,49.6
8,0.589,0.09,80.4,0.32,1.9323,48.7
9,0.622,0.07,159.6,0.3,1.9251,49.2
10,0.656,0.12,123.7,0.66,1.9206,50.2
11,0.666,0.07,123,0.39,1.9051,49.5
12,0.624,0.26,189.9,0.55,1.899,52.4
13,0.611,0.06,145.5,0.42,1.8952,50.7
";

fn metrics_files(dir: &Path) -> Result<()> {
    debug_assert!(CHARACTERISTICS.lines().next().unwrap().split(',').skip(1).all(|k| Metric::from_key(k).is_some()));
    write_bytes(&dir.join("characteristics.csv"), CHARACTERISTICS.as_bytes())?;
    #[derive(serde::Serialize)]
    struct Impact {
        force_n: f64,
        thickness_mm: f64,
    }
    let rows = [(206.5, 6.2), (337.2, 6.2), (331.2, 6.0), (244.4, 5.3), (225.3, 3.7), (136.3, 2.8)];
    write_csv(&dir.join("impact.csv"), rows.iter().map(|&(force_n, thickness_mm)| Impact { force_n, thickness_mm }))
}

fn main() -> std::process::ExitCode {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("data"));
    let run = || -> Result<()> {
        std::fs::create_dir_all(&dir).map_err(|e| nodus::CliError::Usage(format!("{}: {e}", dir.display())))?;
        blade_files(&dir)?;
        frame_sets(&dir)?;
        reaction_files(&dir)?;
        metrics_files(&dir)
    };
    match run() {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::FAILURE
        }
    }
}
