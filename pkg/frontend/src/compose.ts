// Move composition: pick exactly 5 distinct vertices, existing or fresh.
// Validation here is about well-formed requests only; legality (free edge,
// session state) is the server's call.

export const MOVE_SIZE = 5;

export type Selection = number[];

export function toggleVertex(selection: Selection, v: number): Selection {
  if (selection.includes(v)) {
    return selection.filter((x) => x !== v);
  }
  return [...selection, v];
}

export function freshSelection(freshBase: number): Selection {
  return Array.from({ length: MOVE_SIZE }, (_, i) => freshBase + i);
}

export function selectionProblem(selection: Selection): string | null {
  if (new Set(selection).size !== selection.length) {
    return "duplicate vertex selected";
  }
  if (selection.some((v) => !Number.isInteger(v) || v < 0)) {
    return "vertex ids must be non-negative integers";
  }
  if (selection.length < MOVE_SIZE) {
    return `select ${MOVE_SIZE - selection.length} more`;
  }
  if (selection.length > MOVE_SIZE) {
    return `deselect ${selection.length - MOVE_SIZE}`;
  }
  return null;
}

export function canSubmit(selection: Selection): boolean {
  return selectionProblem(selection) === null;
}

export function composeMove(selection: Selection): { vertices: number[] } {
  const problem = selectionProblem(selection);
  if (problem !== null) {
    throw new Error(problem);
  }
  return { vertices: [...selection].sort((a, b) => a - b) };
}
