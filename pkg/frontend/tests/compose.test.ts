import { describe, expect, it } from "vitest";

import {
  canSubmit,
  composeMove,
  freshSelection,
  selectionProblem,
  toggleVertex,
} from "../src/compose.js";

describe("move composition", () => {
  it("toggles vertices in and out", () => {
    let sel: number[] = [];
    sel = toggleVertex(sel, 3);
    sel = toggleVertex(sel, 7);
    expect(sel).toEqual([3, 7]);
    sel = toggleVertex(sel, 3);
    expect(sel).toEqual([7]);
  });

  it("requires exactly five distinct vertices", () => {
    expect(canSubmit([1, 2, 3, 4])).toBe(false);
    expect(selectionProblem([1, 2, 3, 4])).toContain("select 1 more");
    expect(canSubmit([1, 2, 3, 4, 5])).toBe(true);
    expect(canSubmit([1, 2, 3, 4, 5, 6])).toBe(false);
  });

  it("rejects duplicates and negatives", () => {
    expect(selectionProblem([1, 1, 2, 3, 4])).toContain("duplicate");
    expect(selectionProblem([-1, 2, 3, 4, 5])).toContain("non-negative");
  });

  it("builds a sorted payload", () => {
    expect(composeMove([9, 2, 14, 0, 5])).toEqual({
      vertices: [0, 2, 5, 9, 14],
    });
    expect(() => composeMove([1, 2, 3, 4])).toThrow();
  });

  it("offers five fresh ids from the advertised base", () => {
    expect(freshSelection(55)).toEqual([55, 56, 57, 58, 59]);
    expect(canSubmit(freshSelection(0))).toBe(true);
  });
});
