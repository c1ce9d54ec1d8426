/** View state and the pure derivations the coordinated views share.
 *
 * Highlights are recomputed from (ViewState, workspace data) on every
 * change; nothing below keeps hidden state, so replaying the same event
 * sequence always reproduces the same highlight set.
 */

import type {
  ComparisonPayload,
  LabelLevel,
  LayoutPayload,
  SearchPayload,
  SentencesPayload,
  TextPayload,
  TreeNode,
  TreePayload,
} from "./types.js";

/** Layout-space circle radius below which a circle stays unlabeled.
 *
 * Mirrors the engine default; the layout service applies the same cut
 * when it assigns each circle's label_level at scale 1.
 */
export const LABEL_MIN_RADIUS = 14;

/** Layout-space radius at which a labeled circle also shows its cloud. */
export const CLOUD_MIN_RADIUS = 40;

export interface ZoomTransform {
  k: number;
  x: number;
  y: number;
}

export const IDENTITY_ZOOM: ZoomTransform = { k: 1, x: 0, y: 0 };

export type HoverTarget =
  | { kind: "concept"; conceptId: string }
  | { kind: "sentence"; docId: string; index: number };

export interface ViewState {
  documentIds: string[];
  hover: HoverTarget | null;
  searchQuery: string;
  /** Concept ids per document reported by the last completed search. */
  searchMatches: Record<string, string[]>;
  /** Visible tree depth; geometry deeper than this is not rendered. */
  slicerLevel: number;
  zoom: Record<string, ZoomTransform>;
}

export interface HighlightSet {
  conceptIds: Set<string>;
  sentencesByDoc: Map<string, Set<number>>;
}

export function emptyHighlights(): HighlightSet {
  return { conceptIds: new Set(), sentencesByDoc: new Map() };
}

/** Per-document lookups precomputed from one concept tree.
 *
 * Interior concepts that occur in the text appear twice in the tree:
 * once as the interior node and once as an explicit self leaf with the
 * same id one level down. nodeDepth keeps the interior (contour) depth,
 * circleDepth the leaf depth.
 */
export interface DocIndex {
  labels: Map<string, string>;
  occurrences: Map<string, number[]>;
  frequency: Map<string, number>;
  detected: Set<string>;
  /** Tree depth of each concept node, root at 0. */
  nodeDepth: Map<string, number>;
  /** Depth of each concept's leaf circle in the layout. */
  circleDepth: Map<string, number>;
  /** Concept id of the depth-1 ancestor grouping the concept list. */
  topAncestor: Map<string, string>;
  maxDepth: number;
}

export interface DocData {
  id: string;
  title: string;
  text: TextPayload;
  sentences: SentencesPayload;
  tree: TreePayload;
  layout: LayoutPayload;
  index: DocIndex;
}

export interface Workspace {
  docs: DocData[];
  comparison: ComparisonPayload | null;
}

export function buildDocIndex(tree: TreePayload): DocIndex {
  const index: DocIndex = {
    labels: new Map(),
    occurrences: new Map(),
    frequency: new Map(),
    detected: new Set(),
    nodeDepth: new Map(),
    circleDepth: new Map(),
    topAncestor: new Map(),
    maxDepth: 0,
  };
  if (tree.root === null) {
    return index;
  }
  const walk = (node: TreeNode, depth: number, top: string | null): void => {
    if (!index.labels.has(node.id)) {
      index.labels.set(node.id, node.label);
    }
    // the interior visit comes first, so keep-first retains contour depth
    if (!index.nodeDepth.has(node.id)) {
      index.nodeDepth.set(node.id, depth);
    }
    // depth-1 ancestor; the root and its children group under themselves
    const ancestor = top ?? node.id;
    if (!index.topAncestor.has(node.id)) {
      index.topAncestor.set(node.id, ancestor);
    }
    if (node.detected) {
      index.detected.add(node.id);
      index.occurrences.set(node.id, node.occurrences);
      index.frequency.set(node.id, node.frequency);
    }
    if (node.children.length === 0) {
      index.circleDepth.set(node.id, depth);
    }
    index.maxDepth = Math.max(index.maxDepth, depth);
    for (const child of node.children) {
      walk(child, depth + 1, depth === 0 ? child.id : ancestor);
    }
  };
  walk(tree.root, 0, null);
  return index;
}

export function maxWorkspaceDepth(workspace: Workspace): number {
  let depth = 0;
  for (const doc of workspace.docs) {
    depth = Math.max(depth, doc.index.maxDepth);
  }
  return depth;
}

export function initialViewState(workspace: Workspace): ViewState {
  const zoom: Record<string, ZoomTransform> = {};
  for (const doc of workspace.docs) {
    zoom[doc.id] = { ...IDENTITY_ZOOM };
  }
  return {
    documentIds: workspace.docs.map((doc) => doc.id),
    hover: null,
    searchQuery: "",
    searchMatches: {},
    slicerLevel: maxWorkspaceDepth(workspace),
    zoom,
  };
}

export function clampSlicer(level: number, workspace: Workspace): number {
  const max = maxWorkspaceDepth(workspace);
  return Math.min(Math.max(Math.round(level), 0), max);
}

function addSentences(
  highlights: HighlightSet,
  doc: DocData,
  conceptId: string,
): void {
  const sentences = doc.index.occurrences.get(conceptId);
  if (sentences === undefined || sentences.length === 0) {
    return;
  }
  let bucket = highlights.sentencesByDoc.get(doc.id);
  if (bucket === undefined) {
    bucket = new Set();
    highlights.sentencesByDoc.set(doc.id, bucket);
  }
  for (const index of sentences) {
    bucket.add(index);
  }
}

/** Derive the coordinated highlight set for the current view state.
 *
 * Hovering wins over an active search; a concept hover lights the
 * concept everywhere it occurs, a sentence hover lights that sentence
 * plus every concept found in it.
 */
export function deriveHighlights(
  state: ViewState,
  workspace: Workspace,
): HighlightSet {
  const highlights = emptyHighlights();
  if (state.hover !== null) {
    if (state.hover.kind === "concept") {
      const conceptId = state.hover.conceptId;
      highlights.conceptIds.add(conceptId);
      for (const doc of workspace.docs) {
        addSentences(highlights, doc, conceptId);
      }
    } else {
      const { docId, index } = state.hover;
      highlights.sentencesByDoc.set(docId, new Set([index]));
      const doc = workspace.docs.find((d) => d.id === docId);
      if (doc !== undefined) {
        for (const [conceptId, sentences] of doc.index.occurrences) {
          if (sentences.includes(index)) {
            highlights.conceptIds.add(conceptId);
          }
        }
      }
    }
    return highlights;
  }
  for (const [docId, conceptIds] of Object.entries(state.searchMatches)) {
    const doc = workspace.docs.find((d) => d.id === docId);
    for (const conceptId of conceptIds) {
      highlights.conceptIds.add(conceptId);
      if (doc !== undefined) {
        addSentences(highlights, doc, conceptId);
      }
    }
  }
  return highlights;
}

/** Fold a search payload into the per-document match map. */
export function searchMatchesFromPayload(
  payload: SearchPayload,
): Record<string, string[]> {
  const matches: Record<string, string[]> = {};
  for (const result of payload.results) {
    for (const docId of result.documents) {
      (matches[docId] ??= []).push(result.concept_id);
    }
  }
  return matches;
}

/** Label state of one circle at the given zoom factor.
 *
 * The on-screen radius is the layout radius scaled by the zoom; the
 * thresholds are the engine's own, so at zoom 1 this reproduces the
 * label_level the layout payload carries.
 */
export function labelLevelAtZoom(radius: number, zoomK: number): LabelLevel {
  const screenRadius = radius * zoomK;
  if (screenRadius < LABEL_MIN_RADIUS) {
    return "UNLABELED";
  }
  if (screenRadius < CLOUD_MIN_RADIUS) {
    return "LABELED";
  }
  return "LABELED_WITH_CLOUD";
}
