//! Conjugation-symmetric colourings of `Ω_n`, tilings built from them, orbit
//! plots, and binary PPM output.
//!
//! Orbits are grouped so that every group is closed under conjugation: all
//! fixed points form one group, a self-conjugate orbit is a group on its own,
//! and an orbit together with its distinct conjugate orbit forms one group.
//! Point `(x, y)` is drawn at column `x`, row `n − 1 − y` (row 0 on top), so
//! conjugation is a 180° rotation of the picture.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::orbit_iter;
use crate::space::{OmegaSpace, Point};

/// Largest image rendered, in pixels (768 MiB of RGB).
pub const DEFAULT_PIXEL_BUDGET: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    FixedPointSet,
    SelfConjugate,
    MergedPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorGroup {
    pub id: usize,
    pub point_count: u64,
    /// Canonical representatives of the member orbits, ascending.
    pub members: Vec<Point>,
    pub kind: GroupKind,
}

/// Group label of every point of `Ω_n` together with the groups.
#[derive(Debug, Clone)]
pub struct Coloring {
    space: OmegaSpace,
    groups: Vec<ColorGroup>,
    labels: Vec<u32>,
}

const UNSET: u32 = u32::MAX;

impl Coloring {
    pub fn new(space: &OmegaSpace) -> Result<Self> {
        Self::with_budget(space, DEFAULT_PIXEL_BUDGET)
    }

    pub fn with_budget(space: &OmegaSpace, budget: u64) -> Result<Self> {
        if space.size() > budget {
            return Err(Error::PointCapExceeded {
                n: space.n(),
                size: space.size(),
                cap: budget,
            });
        }
        let mut labels = vec![UNSET; space.size() as usize];
        let mut groups: Vec<ColorGroup> = Vec::new();
        let mut fixed_group = None;

        for start in space.points() {
            if labels[space.index(start) as usize] != UNSET {
                continue;
            }
            let is_fixed = space.step(start) == start;
            let partner = labels[space.index(space.mirror(start)) as usize];
            let id = if is_fixed {
                *fixed_group.get_or_insert_with(|| {
                    groups.push(ColorGroup {
                        id: groups.len(),
                        point_count: 0,
                        members: Vec::new(),
                        kind: GroupKind::FixedPointSet,
                    });
                    groups.len() - 1
                })
            } else if partner != UNSET {
                let id = partner as usize;
                groups[id].kind = GroupKind::MergedPair;
                id
            } else {
                groups.push(ColorGroup {
                    id: groups.len(),
                    point_count: 0,
                    members: Vec::new(),
                    kind: GroupKind::SelfConjugate,
                });
                groups.len() - 1
            };
            let group = &mut groups[id];
            group.members.push(start);
            for p in orbit_iter(space, start)? {
                labels[space.index(p) as usize] = id as u32;
                group.point_count += 1;
            }
        }
        Ok(Coloring {
            space: *space,
            groups,
            labels,
        })
    }

    pub fn groups(&self) -> &[ColorGroup] {
        &self.groups
    }

    pub fn into_groups(self) -> Vec<ColorGroup> {
        self.groups
    }

    pub fn group_of(&self, p: Point) -> usize {
        self.labels[self.space.index(p) as usize] as usize
    }

    /// RGB colour per group: black for the fixed-point set, then fully
    /// saturated hues evenly spaced around the colour wheel in group order.
    pub fn palette(&self) -> Vec<[u8; 3]> {
        let hued = self
            .groups
            .iter()
            .filter(|g| g.kind != GroupKind::FixedPointSet)
            .count() as u64;
        let mut next_hue = 0;
        self.groups
            .iter()
            .map(|g| {
                if g.kind == GroupKind::FixedPointSet {
                    [0, 0, 0]
                } else {
                    let c = hue_color(next_hue, hued);
                    next_hue += 1;
                    c
                }
            })
            .collect()
    }
}

/// Hue `i/count` of the full circle at full saturation and value, using
/// integer steps of 1/255 within each of the six 60° sectors.
fn hue_color(i: u64, count: u64) -> [u8; 3] {
    let t = i * 6 * 255 / count.max(1);
    let (sector, f) = (t / 255, (t % 255) as u8);
    let (rise, fall) = (f, 255 - f);
    match sector {
        0 => [255, rise, 0],
        1 => [fall, 255, 0],
        2 => [0, 255, rise],
        3 => [0, fall, 255],
        4 => [rise, 0, 255],
        _ => [255, 0, fall],
    }
}

pub fn color_groups(space: &OmegaSpace) -> Result<Vec<ColorGroup>> {
    Coloring::new(space).map(Coloring::into_groups)
}

/// Row-major 8-bit RGB raster, row 0 on top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: u64,
    height: u64,
    pixels: Vec<u8>,
}

impl Image {
    pub fn filled(width: u64, height: u64, color: [u8; 3]) -> Result<Self> {
        Self::filled_with_budget(width, height, color, DEFAULT_PIXEL_BUDGET)
    }

    fn filled_with_budget(width: u64, height: u64, color: [u8; 3], budget: u64) -> Result<Self> {
        match width.checked_mul(height) {
            Some(px) if px <= budget => {}
            _ => {
                return Err(Error::ImageTooLarge {
                    width,
                    height,
                    budget,
                })
            }
        }
        let pixels = color
            .iter()
            .copied()
            .cycle()
            .take((3 * width * height) as usize)
            .collect();
        Ok(Image {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> u64 {
        self.width
    }

    pub fn height(&self) -> u64 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    #[inline]
    fn offset(&self, col: u64, row: u64) -> usize {
        (3 * (row * self.width + col)) as usize
    }

    pub fn pixel(&self, col: u64, row: u64) -> [u8; 3] {
        let i = self.offset(col, row);
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn set_pixel(&mut self, col: u64, row: u64, color: [u8; 3]) {
        let i = self.offset(col, row);
        self.pixels[i..i + 3].copy_from_slice(&color);
    }

    fn fill_cell(&mut self, col: u64, row: u64, cell: u64, color: [u8; 3]) {
        for r in row * cell..(row + 1) * cell {
            for c in col * cell..(col + 1) * cell {
                self.set_pixel(c, r, color);
            }
        }
    }

    pub fn rotated_180(&self) -> Image {
        let mut pixels = Vec::with_capacity(self.pixels.len());
        for px in self.pixels.chunks_exact(3).rev() {
            pixels.extend_from_slice(px);
        }
        Image {
            width: self.width,
            height: self.height,
            pixels,
        }
    }

    pub fn distinct_colors(&self) -> usize {
        let mut colors: Vec<&[u8]> = self.pixels.chunks_exact(3).collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }

    /// Binary PPM: `P6\n{width} {height}\n255\n` followed by the raw bytes.
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_ppm(&mut out)
            .expect("writing to a Vec cannot fail");
        out
    }

    pub fn write_ppm<W: Write>(&self, mut out: W) -> io::Result<()> {
        write!(out, "P6\n{} {}\n255\n", self.width, self.height)?;
        out.write_all(&self.pixels)?;
        out.flush()
    }
}

fn positive(value: u64, what: &'static str) -> Result<u64> {
    if value == 0 {
        Err(Error::NonPositive(what))
    } else {
        Ok(value)
    }
}

fn blank_canvas(space: &OmegaSpace, cell: u64, color: [u8; 3]) -> Result<Image> {
    let cell = positive(cell, "cell size")?;
    let width = space.chunk_modulus().checked_mul(cell);
    let height = space.n().checked_mul(cell);
    match (width, height) {
        (Some(w), Some(h)) => Image::filled(w, h, color),
        _ => Err(Error::ImageTooLarge {
            width: u64::MAX,
            height: u64::MAX,
            budget: DEFAULT_PIXEL_BUDGET,
        }),
    }
}

/// The coloured rectangle: one `cell_px`-square cell per point of `Ω_n`.
pub fn render_omega(space: &OmegaSpace, cell_px: u64) -> Result<Image> {
    let mut img = blank_canvas(space, cell_px, [0, 0, 0])?;
    let coloring = Coloring::new(space)?;
    let palette = coloring.palette();
    for p in space.points() {
        let color = palette[coloring.group_of(p)];
        img.fill_cell(p.x, space.n() - 1 - p.y, cell_px, color);
    }
    Ok(img)
}

/// `rows × cols` copies of [`render_omega`] pasted edge to edge.
pub fn render_tiling(space: &OmegaSpace, rows: u64, cols: u64, cell_px: u64) -> Result<Image> {
    let rows = positive(rows, "row count")?;
    let cols = positive(cols, "column count")?;
    let base = render_omega(space, cell_px)?;
    let (w, h) = (base.width, base.height);
    let (width, height) = match (w.checked_mul(cols), h.checked_mul(rows)) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::ImageTooLarge {
                width: u64::MAX,
                height: u64::MAX,
                budget: DEFAULT_PIXEL_BUDGET,
            })
        }
    };
    let mut img = Image::filled(width, height, [0, 0, 0])?;
    let row_bytes = (3 * w) as usize;
    for r in 0..height {
        let src = base.offset(0, r % h);
        let src = &base.pixels[src..src + row_bytes];
        for c in 0..cols {
            let dst = img.offset(c * w, r);
            img.pixels[dst..dst + row_bytes].copy_from_slice(src);
        }
    }
    Ok(img)
}

/// White canvas with black cells at the points of the orbit through `p`.
pub fn render_orbit_plot(space: &OmegaSpace, p: Point, cell_px: u64) -> Result<Image> {
    let p = space.check(p)?;
    let mut img = blank_canvas(space, cell_px, [255, 255, 255])?;
    for q in orbit_iter(space, p)? {
        img.fill_cell(q.x, space.n() - 1 - q.y, cell_px, [0, 0, 0]);
    }
    Ok(img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: u64) -> OmegaSpace {
        OmegaSpace::new(n).unwrap()
    }

    #[test]
    fn omega_8_groups() {
        let groups = color_groups(&space(8)).unwrap();
        assert_eq!(groups.len(), 4);
        assert_eq!(groups[0].kind, GroupKind::FixedPointSet);
        assert_eq!(groups[0].point_count, 2);
        for g in &groups[1..] {
            assert_eq!(g.point_count, 26);
            assert_eq!(g.kind, GroupKind::MergedPair);
            assert_eq!(g.members.len(), 2);
        }
    }

    #[test]
    fn omega_103_two_cycles_are_their_own_groups() {
        let s = space(103);
        let coloring = Coloring::new(&s).unwrap();
        for (a, b) in [
            (76, 95),
            (153, 87),
            (230, 79),
            (307, 71),
            (384, 63),
            (461, 55),
        ] {
            let g = &coloring.groups()[coloring.group_of(Point::new(a, b))];
            assert_eq!(g.kind, GroupKind::SelfConjugate);
            assert_eq!(g.point_count, 2);
            assert_eq!(g.members, vec![Point::new(a, b)]);
        }
    }

    #[test]
    fn groups_are_conjugation_closed() {
        for n in [2, 8, 13, 37, 46, 99] {
            let s = space(n);
            let c = Coloring::new(&s).unwrap();
            for p in s.points() {
                assert_eq!(c.group_of(p), c.group_of(s.mirror(p)), "n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn groups_ordered_by_smallest_member() {
        let groups = color_groups(&space(37)).unwrap();
        for w in groups.windows(2) {
            assert!(w[0].members[0] < w[1].members[0]);
        }
        for (i, g) in groups.iter().enumerate() {
            assert_eq!(g.id, i);
        }
    }

    #[test]
    fn omega_2_has_two_colors() {
        let img = render_omega(&space(2), 1).unwrap();
        assert_eq!((img.width(), img.height()), (10, 2));
        assert_eq!(img.distinct_colors(), 2);
        // (0, 0) is fixed: bottom-left cell is black
        assert_eq!(img.pixel(0, 1), [0, 0, 0]);
    }

    #[test]
    fn omega_8_render() {
        let img = render_omega(&space(8), 1).unwrap();
        assert_eq!((img.width(), img.height()), (10, 8));
        assert_eq!(img.distinct_colors(), 4);
        assert_eq!(img.rotated_180(), img);
    }

    #[test]
    fn tiling_dimensions_and_symmetry() {
        let s = space(8);
        assert_eq!(
            render_tiling(&s, 1, 1, 1).unwrap(),
            render_omega(&s, 1).unwrap()
        );
        let t = render_tiling(&s, 2, 3, 4).unwrap();
        assert_eq!((t.width(), t.height()), (120, 64));
        assert_eq!(t.rotated_180(), t);
        assert_eq!(
            render_tiling(&s, 0, 1, 1),
            Err(Error::NonPositive("row count"))
        );
    }

    #[test]
    fn orbit_plots() {
        let black = |img: &Image| {
            img.pixels()
                .chunks_exact(3)
                .filter(|p| p == &[0, 0, 0])
                .count()
        };
        let s = space(9);
        let img = render_orbit_plot(&s, s.standard_point(), 1).unwrap();
        assert_eq!((img.width(), img.height()), (10, 9));
        assert_eq!(black(&img), 44);
        let s = space(7);
        assert_eq!(
            black(&render_orbit_plot(&s, s.standard_point(), 1).unwrap()),
            22
        );
        let img = render_orbit_plot(&s, Point::new(0, 0), 3).unwrap();
        assert_eq!(black(&img), 9);
    }

    #[test]
    fn ppm_bytes() {
        let img = Image::filled(1, 1, [255, 255, 255]).unwrap();
        assert_eq!(img.to_ppm(), b"P6\n1 1\n255\n\xff\xff\xff");
        let img = render_omega(&space(8), 2).unwrap();
        let ppm = img.to_ppm();
        assert_eq!(ppm.len(), "P6\n20 16\n255\n".len() + 3 * 20 * 16);
        assert_eq!(ppm, render_omega(&space(8), 2).unwrap().to_ppm());
    }

    #[test]
    fn palette_hues() {
        assert_eq!(hue_color(0, 3), [255, 0, 0]);
        assert_eq!(hue_color(1, 3), [0, 255, 0]);
        assert_eq!(hue_color(2, 3), [0, 0, 255]);
        assert_eq!(hue_color(1, 2), [0, 255, 255]);
    }

    #[test]
    fn image_budget() {
        assert!(matches!(
            Image::filled_with_budget(10, 10, [0; 3], 99),
            Err(Error::ImageTooLarge { .. })
        ));
        assert_eq!(
            render_omega(&space(8), 0),
            Err(Error::NonPositive("cell size"))
        );
    }
}
