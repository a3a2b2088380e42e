//! Image and mask buffers shared across the pipeline.
//!
//! Pixels are stored row-major as `f64`. Dataset images live in `[0, 1]`
//! after PNG decoding; the metrics module also accepts buffers holding raw
//! 8-bit values (`[0, 255]`) with an explicit peak value.

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ImageError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("image codec error: {0}")]
    Codec(#[from] image::ImageError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty image")]
    Empty,
}

/// Row-major float image, `channels` interleaved per pixel.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageBuffer {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    pub data: Vec<f64>,
}

impl ImageBuffer {
    pub fn new(width: usize, height: usize, channels: usize) -> Self {
        Self { width, height, channels, data: vec![0.0; width * height * channels] }
    }

    /// Constant-valued image.
    pub fn filled(width: usize, height: usize, value: [f64; 3]) -> Self {
        let mut img = Self::new(width, height, 3);
        for px in img.data.chunks_exact_mut(3) {
            px.copy_from_slice(&value);
        }
        img
    }

    pub fn from_data(width: usize, height: usize, channels: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), width * height * channels, "data length mismatch");
        Self { width, height, channels, data }
    }

    #[inline]
    pub fn pixel(&self, x: usize, y: usize) -> &[f64] {
        let i = (y * self.width + x) * self.channels;
        &self.data[i..i + self.channels]
    }

    #[inline]
    pub fn pixel_mut(&mut self, x: usize, y: usize) -> &mut [f64] {
        let i = (y * self.width + x) * self.channels;
        &mut self.data[i..i + self.channels]
    }

    pub fn n_pixels(&self) -> usize {
        self.width * self.height
    }

    /// Decode a PNG into a 3-channel buffer with values in `[0, 1]`.
    pub fn load_png(path: &Path) -> Result<Self, ImageError> {
        let img = image::open(path)?.to_rgb8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let data = img.as_raw().iter().map(|&v| v as f64 / 255.0).collect();
        Ok(Self { width: w, height: h, channels: 3, data })
    }

    /// Encode as 8-bit PNG, mapping values through `round(255 * clamp(v, 0, 1))`.
    pub fn save_png(&self, path: &Path) -> Result<(), ImageError> {
        assert_eq!(self.channels, 3, "save_png expects RGB");
        let bytes: Vec<u8> = self.data.iter().map(|&v| quantize_u8(v)).collect();
        let img = image::RgbImage::from_raw(self.width as u32, self.height as u32, bytes)
            .ok_or(ImageError::Empty)?;
        crate::fsutil::atomic_write(path, |tmp| {
            img.save_with_format(tmp, image::ImageFormat::Png).map_err(ImageError::Codec)
        })
    }
}

#[inline]
pub fn quantize_u8(v: f64) -> u8 {
    (255.0 * v.clamp(0.0, 1.0)).round() as u8
}

/// Single-channel mask; foreground where value >= 0.5.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskBuffer {
    pub width: usize,
    pub height: usize,
    pub data: Vec<f64>,
}

impl MaskBuffer {
    pub fn new(width: usize, height: usize) -> Self {
        Self { width, height, data: vec![0.0; width * height] }
    }

    pub fn from_data(width: usize, height: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), width * height, "data length mismatch");
        Self { width, height, data }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn is_foreground(&self, x: usize, y: usize) -> bool {
        self.get(x, y) >= 0.5
    }

    /// Number of foreground pixels.
    pub fn foreground_count(&self) -> usize {
        self.data.iter().filter(|&&v| v >= 0.5).count()
    }

    /// Decode a PNG; any channel layout is reduced to luma, 255 = foreground.
    pub fn load_png(path: &Path) -> Result<Self, ImageError> {
        let img = image::open(path)?.to_luma8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let data = img.as_raw().iter().map(|&v| v as f64 / 255.0).collect();
        Ok(Self { width: w, height: h, data })
    }

    /// Encode as single-channel 8-bit PNG.
    pub fn save_png(&self, path: &Path) -> Result<(), ImageError> {
        let bytes: Vec<u8> = self.data.iter().map(|&v| quantize_u8(v)).collect();
        let img = image::GrayImage::from_raw(self.width as u32, self.height as u32, bytes)
            .ok_or(ImageError::Empty)?;
        crate::fsutil::atomic_write(path, |tmp| {
            img.save_with_format(tmp, image::ImageFormat::Png).map_err(ImageError::Codec)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pixel_indexing_round_trips() {
        let mut img = ImageBuffer::new(4, 3, 3);
        img.pixel_mut(2, 1).copy_from_slice(&[0.1, 0.2, 0.3]);
        assert_eq!(img.pixel(2, 1), &[0.1, 0.2, 0.3]);
        assert_eq!(img.pixel(0, 0), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn png_round_trip_preserves_8bit_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("img.png");
        let mut img = ImageBuffer::new(5, 4, 3);
        for (i, v) in img.data.iter_mut().enumerate() {
            *v = (i % 256) as f64 / 255.0;
        }
        img.save_png(&path).unwrap();
        let back = ImageBuffer::load_png(&path).unwrap();
        assert_eq!(back.width, 5);
        assert_eq!(back.height, 4);
        for (a, b) in img.data.iter().zip(back.data.iter()) {
            assert!((a - b).abs() < 0.5 / 255.0, "a={a} b={b}");
        }
    }

    #[test]
    fn mask_foreground_threshold() {
        let mask = MaskBuffer::from_data(2, 1, vec![0.49, 0.5]);
        assert!(!mask.is_foreground(0, 0));
        assert!(mask.is_foreground(1, 0));
        assert_eq!(mask.foreground_count(), 1);
    }
}
