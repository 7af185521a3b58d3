import { describe, expect, it } from "vitest";

import { forceLayout, mulberry32 } from "../src/layout";
import { cannedResponse, EDGES } from "./fixture";

describe("seeded layout", () => {
  it("is identical for the same seed", () => {
    const n = cannedResponse().graph.nodes.length;
    const first = forceLayout(n, EDGES, 7);
    const second = forceLayout(n, EDGES, 7);
    expect(second).toEqual(first);
  });

  it("differs for different seeds", () => {
    const n = cannedResponse().graph.nodes.length;
    const a = forceLayout(n, EDGES, 1);
    const b = forceLayout(n, EDGES, 2);
    expect(a).not.toEqual(b);
  });

  it("keeps every node inside the viewport", () => {
    const positions = forceLayout(13, EDGES, 3, { width: 640, height: 640, padding: 24 });
    for (const p of positions) {
      expect(p.x).toBeGreaterThanOrEqual(24);
      expect(p.x).toBeLessThanOrEqual(616);
      expect(p.y).toBeGreaterThanOrEqual(24);
      expect(p.y).toBeLessThanOrEqual(616);
    }
  });

  it("pulls connected nodes closer than the average pair", () => {
    const positions = forceLayout(13, EDGES, 5);
    const dist = (a: number, b: number) =>
      Math.hypot(positions[a].x - positions[b].x, positions[a].y - positions[b].y);
    let edgeSum = 0;
    for (const [a, b] of EDGES) edgeSum += dist(a, b);
    const edgeMean = edgeSum / EDGES.length;
    let allSum = 0;
    let pairs = 0;
    for (let a = 0; a < 13; a++) {
      for (let b = a + 1; b < 13; b++) {
        allSum += dist(a, b);
        pairs += 1;
      }
    }
    expect(edgeMean).toBeLessThan(allSum / pairs);
  });

  it("mulberry32 streams are reproducible", () => {
    const a = mulberry32(42);
    const b = mulberry32(42);
    const streamA = Array.from({ length: 5 }, () => a());
    const streamB = Array.from({ length: 5 }, () => b());
    expect(streamA).toEqual(streamB);
    for (const value of streamA) {
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });
});
