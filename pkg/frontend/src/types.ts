/** Payload shapes of the analysis server's HTTP API.
 *
 * These mirror the JSON emitted by the Python service one to one; the
 * UI never derives geometry or statistics of its own, so every field
 * here is consumed verbatim.
 */

export interface DocumentInfo {
  id: string;
  title: string;
  n_concepts: number;
}

export interface TextPayload {
  document_id: string;
  title: string;
  text: string;
}

export interface SentenceInfo {
  index: number;
  text: string;
  /** Half-open [start, end) offsets into the raw text. */
  span: [number, number];
}

export interface SentencesPayload {
  document_id: string;
  sentences: SentenceInfo[];
}

export interface TreeNode {
  id: string;
  label: string;
  detected: boolean;
  /** True when an interior concept occurs in the text itself. */
  self: boolean;
  frequency: number;
  occurrences: number[];
  children: TreeNode[];
}

export interface TreePayload {
  document_id: string;
  root: TreeNode | null;
}

export type LabelLevel = "UNLABELED" | "LABELED" | "LABELED_WITH_CLOUD";

export interface LayoutBounds {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface LayoutCircle {
  id: string;
  x: number;
  y: number;
  r: number;
  color: string;
  label_level: LabelLevel;
}

export interface LayoutContour {
  id: string;
  depth: number;
  luminance: number;
  /** Closed outline; the final vertex implicitly connects to the first. */
  path: [number, number][];
}

export interface WordCloudItem {
  word: string;
  weight: number;
  /** Offsets relative to the owning circle's center, in layout units. */
  x: number;
  y: number;
  size: number;
}

export interface LayoutPayload {
  document_id: string;
  bounds: LayoutBounds;
  circles: LayoutCircle[];
  contours: LayoutContour[];
  clouds: Record<string, WordCloudItem[]>;
}

export interface ConceptOccurrence {
  frequency: number;
  sentences: number[];
}

export interface ConceptPayload {
  id: string;
  label: string;
  synonyms: string[];
  same_as: string[];
  parents: string[];
  siblings: string[];
  occurrences: Record<string, ConceptOccurrence>;
}

export interface ComparisonPayload {
  document_ids: string[];
  vectors: Record<string, number[]>;
  shared: string[];
  unique: Record<string, string[]>;
}

export interface SearchResult {
  concept_id: string;
  label: string;
  documents: string[];
}

export interface SearchPayload {
  query: string;
  results: SearchResult[];
}
