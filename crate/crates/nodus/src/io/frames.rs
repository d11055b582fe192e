//! Frame directories: 8-bit grayscale PNG or binary PGM files, read in file
//! name order, plus a key-value metadata file.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use nodus_core::blurvision::{FrameStack, GrayImage};

use super::kv::KeyValues;
use super::write_bytes;
use crate::error::{CliError, Result};

pub const METADATA_FILE: &str = "metadata.txt";
const METADATA_KEYS: [&str; 4] = ["fps", "mm_per_px", "r_rest_mm", "r_nodus_mm"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameMetadata {
    pub fps: f64,
    pub mm_per_px: f64,
    pub r_rest_mm: f64,
    pub r_nodus_mm: f64,
}

pub fn read_metadata(path: &Path) -> Result<FrameMetadata> {
    let kv = KeyValues::read(path)?;
    kv.only(&METADATA_KEYS)?;
    Ok(FrameMetadata {
        fps: kv.get("fps")?,
        mm_per_px: kv.get("mm_per_px")?,
        r_rest_mm: kv.get("r_rest_mm")?,
        r_nodus_mm: kv.get("r_nodus_mm")?,
    })
}

pub fn format_metadata(m: &FrameMetadata) -> String {
    format!(
        "fps = {}\nmm_per_px = {}\nr_rest_mm = {}\nr_nodus_mm = {}\n",
        m.fps, m.mm_per_px, m.r_rest_mm, m.r_nodus_mm
    )
}

fn frame_paths(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut paths = Vec::new();
    for e in entries {
        let p = e.map_err(|e| CliError::io(dir, e))?.path();
        let ext = p.extension().and_then(|s| s.to_str()).map(str::to_ascii_lowercase);
        if matches!(ext.as_deref(), Some("png" | "pgm")) {
            paths.push(p);
        }
    }
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::parse(dir, "no .png or .pgm frames"));
    }
    Ok(paths)
}

pub fn read_frame(path: &Path) -> Result<GrayImage> {
    match path.extension().and_then(|s| s.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("pgm") => {
            let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
            decode_pgm(&bytes).map_err(|m| CliError::parse(path, m))
        }
        _ => read_png(path),
    }
}

/// Loads every frame in `dir`; metadata defaults to `dir/metadata.txt`.
pub fn read_stack(dir: &Path, metadata: Option<&Path>) -> Result<FrameStack> {
    let meta_path = metadata.map(Path::to_path_buf).unwrap_or_else(|| dir.join(METADATA_FILE));
    let paths = frame_paths(dir)?;
    let meta = read_metadata(&meta_path)?;
    let frames = paths.iter().map(|p| read_frame(p)).collect::<Result<Vec<_>>>()?;
    FrameStack::new(frames, meta.fps, meta.mm_per_px, meta.r_rest_mm, meta.r_nodus_mm)
        .map_err(|e| CliError::parse(dir, e))
}

/// Writes `frame_0000.pgm`, … and the metadata file into `dir`.
pub fn write_stack(dir: &Path, stack: &FrameStack, png: bool) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    for (i, f) in stack.frames().iter().enumerate() {
        if png {
            write_png(&dir.join(format!("frame_{i:04}.png")), f)?;
        } else {
            let p = dir.join(format!("frame_{i:04}.pgm"));
            write_bytes(&p, &encode_pgm(f))?;
        }
    }
    let meta = FrameMetadata {
        fps: stack.fps,
        mm_per_px: stack.mm_per_px,
        r_rest_mm: stack.r_rest_mm,
        r_nodus_mm: stack.r_nodus_mm,
    };
    write_bytes(&dir.join(METADATA_FILE), format_metadata(&meta).as_bytes())
}

pub fn encode_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.as_raw());
    out
}

/// Binary `P5` with maxval up to 255; `#` comments allowed in the header.
pub fn decode_pgm(bytes: &[u8]) -> std::result::Result<GrayImage, String> {
    let mut pos = 0;
    let mut fields = Vec::with_capacity(4);
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos < bytes.len() && bytes[pos] == b'#' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err("truncated header".into());
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| "non-ASCII header")?.to_string());
    }
    if fields[0] != "P5" {
        return Err(format!("unsupported magic `{}`; only binary P5 is read", fields[0]));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| format!("bad header field `{s}`"));
    let (w, h, maxval) = (num(&fields[1])?, num(&fields[2])?, num(&fields[3])?);
    if maxval == 0 || maxval > 255 {
        return Err(format!("maxval {maxval} not in 1..=255"));
    }
    // exactly one whitespace byte separates the header from the raster
    let data = bytes.get(pos + 1..).ok_or("missing raster")?;
    if data.len() < w * h {
        return Err(format!("raster has {} bytes, expected {}", data.len(), w * h));
    }
    let raster = data[..w * h].iter().map(|&v| ((v as usize * 255 + maxval / 2) / maxval) as u8).collect();
    GrayImage::from_raw(w, h, raster).map_err(|e| e.to_string())
}

fn read_png(path: &Path) -> Result<GrayImage> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut decoder = png::Decoder::new(file);
    decoder.set_transformations(png::Transformations::normalize_to_color8());
    let mut reader = decoder.read_info().map_err(|e| CliError::parse(path, e))?;
    let mut buf = vec![0; reader.output_buffer_size()];
    let info = reader.next_frame(&mut buf).map_err(|e| CliError::parse(path, e))?;
    let (w, h) = (info.width as usize, info.height as usize);
    let px = &buf[..info.buffer_size()];
    let gray: Vec<u8> = match info.color_type {
        png::ColorType::Grayscale => px.to_vec(),
        png::ColorType::GrayscaleAlpha => px.chunks_exact(2).map(|c| c[0]).collect(),
        png::ColorType::Rgb => px.chunks_exact(3).map(luma).collect(),
        png::ColorType::Rgba => px.chunks_exact(4).map(luma).collect(),
        png::ColorType::Indexed => return Err(CliError::parse(path, "indexed PNG not expanded")),
    };
    GrayImage::from_raw(w, h, gray).map_err(|e| CliError::parse(path, e))
}

/// Rec. 601 luma, rounded.
fn luma(c: &[u8]) -> u8 {
    ((299 * c[0] as u32 + 587 * c[1] as u32 + 114 * c[2] as u32 + 500) / 1000) as u8
}

pub fn write_png(path: &Path, img: &GrayImage) -> Result<()> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut enc = png::Encoder::new(BufWriter::new(file), img.width() as u32, img.height() as u32);
    enc.set_color(png::ColorType::Grayscale);
    enc.set_depth(png::BitDepth::Eight);
    let mut wr = enc.write_header().map_err(|e| CliError::parse(path, e))?;
    wr.write_image_data(img.as_raw()).map_err(|e| CliError::parse(path, e))
}
