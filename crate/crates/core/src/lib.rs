//! desksplat — desk-scale 3D reconstruction with Gaussian splatting.
//!
//! The crate fits a 3D Gaussian-splat model to masked, posed photographs of a
//! single object and turns the result into a cleaned triangle mesh. The
//! pipeline stages map onto the top-level modules:
//!
//! 1. **colmap** — parse the SfM tool's sparse reconstruction (cameras,
//!    image poses, 3D points) in binary or text form.
//! 2. **dataprep** — frame sampling, square cropping, mask application and
//!    video-disjoint train/val/test splitting.
//! 3. **gsplat** — the Gaussian scene representation: covariance
//!    construction, screen-space projection, spherical-harmonic color,
//!    initialization from the sparse point cloud, splat PLY I/O.
//! 4. **raster** — deterministic tile-based forward rendering and the
//!    analytic backward pass.
//! 5. **train** — L1+SSIM photometric loss, Adam, adaptive density control,
//!    best-checkpoint training loop.
//! 6. **metrics** — MSE / PSNR / IoU and batch model evaluation.
//! 7. **mesh** — density isosurfacing (marching cubes), vertex color baking,
//!    black-vertex removal, largest-connected-component extraction, PLY/OBJ.
//! 8. **synth** — synthetic ground-truth scenes for end-to-end verification.

pub mod colmap;
pub mod dataprep;
pub mod fsutil;
pub mod geometry;
pub mod gsplat;
pub mod image;
pub mod mesh;
pub mod metrics;
pub mod raster;
pub mod synth;
pub mod train;

pub use geometry::{PinholeCamera, RigidTransform};
pub use gsplat::{Gaussian, GaussianCloud};
pub use image::{ImageBuffer, MaskBuffer};
pub use mesh::TriangleMesh;
pub use raster::{render, RenderOutput};
pub use train::{Checkpoint, TrainConfig};
