/** Bubble Treemap rendering for one document panel.
 *
 * All geometry comes straight from the layout payload; this module only
 * decides visibility. The slicer removes elements deeper than the
 * chosen level from the DOM entirely, and the zoom factor picks each
 * circle's label state. Circle fills use the payload hex verbatim.
 */

import { clear, svgEl } from "./dom.js";
import {
  labelLevelAtZoom,
  type DocData,
  type ViewState,
} from "./state.js";
import type { LayoutContour } from "./types.js";

/* Fraction of a contour label's font size per character of text; only
 * affects the cosmetic font-size choice, not geometry. */
const CONTOUR_LABEL_SIZE = 18;
const CIRCLE_LABEL_SIZE = 16;

function contourPath(contour: LayoutContour): string {
  const parts = contour.path.map(
    ([x, y], i) => `${i === 0 ? "M" : "L"}${x},${y}`,
  );
  return parts.join("") + "Z";
}

function grayFill(luminance: number): string {
  // L* rendered as an HSL lightness; close enough for the gray ramp and
  // keeps the payload value inspectable via data-luminance
  return `hsl(0 0% ${luminance}%)`;
}

export function renderTreemap(svg: SVGSVGElement, doc: DocData, state: ViewState): void {
  clear(svg);
  const bounds = doc.layout.bounds;
  svg.setAttribute(
    "viewBox",
    `${bounds.x} ${bounds.y} ${bounds.width || 1} ${bounds.height || 1}`,
  );

  const backdrop = svgEl("rect", {
    class: "backdrop",
    x: bounds.x,
    y: bounds.y,
    width: bounds.width || 1,
    height: bounds.height || 1,
    fill: "transparent",
  });
  svg.appendChild(backdrop);

  const zoom = state.zoom[doc.id] ?? { k: 1, x: 0, y: 0 };
  const scene = svgEl("g", {
    class: "scene",
    transform: `translate(${zoom.x},${zoom.y}) scale(${zoom.k})`,
  });
  svg.appendChild(scene);

  const level = state.slicerLevel;
  const fullDepth = level >= doc.index.maxDepth;

  const contourGroup = svgEl("g", { class: "contours" });
  scene.appendChild(contourGroup);
  for (const contour of doc.layout.contours) {
    if (contour.depth > level) {
      continue;
    }
    const path = svgEl("path", {
      class: "contour",
      d: contourPath(contour),
      fill: grayFill(contour.luminance),
      "data-concept": contour.id,
      "data-depth": contour.depth,
      "data-luminance": contour.luminance,
    });
    contourGroup.appendChild(path);
    // sliced-away children expose this contour; give it the label the
    // hidden subtree no longer provides
    if (!fullDepth && contour.depth === level) {
      const label = doc.index.labels.get(contour.id) ?? contour.id;
      const [cx, cy] = contourCenter(contour);
      const text = svgEl("text", {
        class: "contour-label",
        x: cx,
        y: cy,
        "text-anchor": "middle",
        "font-size": CONTOUR_LABEL_SIZE,
        "data-concept": contour.id,
        "data-depth": contour.depth,
      });
      text.textContent = label;
      contourGroup.appendChild(text);
    }
  }

  const circleGroup = svgEl("g", { class: "circles" });
  scene.appendChild(circleGroup);
  for (const circle of doc.layout.circles) {
    const depth = doc.index.circleDepth.get(circle.id) ?? 0;
    if (depth > level) {
      continue;
    }
    const labelLevel = labelLevelAtZoom(circle.r, zoom.k);
    const node = svgEl("g", {
      class: "node",
      "data-concept": circle.id,
      "data-depth": depth,
      "data-level": labelLevel,
    });
    node.appendChild(
      svgEl("circle", {
        class: "concept-circle",
        cx: circle.x,
        cy: circle.y,
        r: circle.r,
        fill: circle.color,
      }),
    );
    if (labelLevel !== "UNLABELED") {
      const text = svgEl("text", {
        class: "circle-label",
        x: circle.x,
        y: circle.y,
        "text-anchor": "middle",
        "font-size": CIRCLE_LABEL_SIZE,
      });
      text.textContent = doc.index.labels.get(circle.id) ?? circle.id;
      node.appendChild(text);
    }
    if (labelLevel === "LABELED_WITH_CLOUD") {
      const items = doc.layout.clouds[circle.id];
      if (items !== undefined && items.length > 0) {
        const cloud = svgEl("g", { class: "cloud" });
        for (const item of items) {
          const word = svgEl("text", {
            class: "cloud-word",
            x: circle.x + item.x,
            y: circle.y + item.y,
            "text-anchor": "middle",
            "font-size": item.size,
            "data-weight": item.weight,
          });
          word.textContent = item.word;
          cloud.appendChild(word);
        }
        node.appendChild(cloud);
      }
    }
    circleGroup.appendChild(node);
  }
}

function contourCenter(contour: LayoutContour): [number, number] {
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const [x, y] of contour.path) {
    minX = Math.min(minX, x);
    minY = Math.min(minY, y);
    maxX = Math.max(maxX, x);
    maxY = Math.max(maxY, y);
  }
  return [(minX + maxX) / 2, (minY + maxY) / 2];
}
