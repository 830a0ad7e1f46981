// Mirror of the play service wire schema (docs/wire-schema.md, version 1).
// The client renders these fields verbatim and derives no game facts itself.

export const SCHEMA_VERSION = 1;

export type Edge = number[];

export type Kind = "standard" | "special";

export type Status = "Active" | "FpWin" | "SpWin" | "Aborted";

export type Stage = "build" | "defend" | "attack";

export interface ThreatBadge {
  kind: Kind;
  completingEdge: Edge;
}

export interface TargetInfo {
  k: number;
  edgeCount: number;
  vertexCount: number;
  z: number;
}

export interface CreateReply {
  schemaVersion: number;
  sessionId: string;
  status: Status;
  stage: Stage;
  target: TargetInfo;
  freshBase: number;
}

export interface FpMoveEcho {
  edge: Edge;
  kinds: Kind[];
  completions: Edge[];
}

export interface SpMoveEcho {
  edge: Edge;
  role: "build" | "block" | "attack" | "win";
}

export interface MoveReply {
  schemaVersion: number;
  fpMove: FpMoveEcho;
  spMove: SpMoveEcho | null;
  status: Status;
  stage: Stage;
  refutationCandidate: boolean;
  fpThreats: ThreatBadge[];
  spThreats: ThreatBadge[];
  freshBase: number;
}

export interface HistoryEntry {
  index: number;
  player: "FP" | "SP";
  edge: Edge;
}

export interface CopyOutline {
  vertices: number[];
  edges: Edge[];
}

export interface BoardPayload {
  schemaVersion: number;
  sessionId: string;
  status: Status;
  stage: Stage;
  refutationCandidate: boolean;
  target: TargetInfo;
  fpEdges: Edge[];
  spEdges: Edge[];
  history: HistoryEntry[];
  fpThreats: ThreatBadge[];
  spThreats: ThreatBadge[];
  spCopy: CopyOutline | null;
  freshBase: number;
}

export interface ServiceError {
  error: string;
}
