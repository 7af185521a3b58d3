// Seeded force-directed layout. The server stays layout-agnostic; positions
// are computed client-side from the edge list and are fully reproducible for
// a fixed (node count, edges, seed).

export interface Point {
  x: number;
  y: number;
}

/** Small deterministic PRNG (mulberry32). */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width?: number;
  height?: number;
  iterations?: number;
  padding?: number;
}

/** Fruchterman-Reingold style relaxation from a seeded random start. */
export function forceLayout(
  nodeCount: number,
  edges: readonly [number, number][],
  seed: number,
  options: LayoutOptions = {},
): Point[] {
  const width = options.width ?? 640;
  const height = options.height ?? 640;
  const iterations = options.iterations ?? 120;
  const padding = options.padding ?? 24;
  const random = mulberry32(seed);

  const xs = new Float64Array(nodeCount);
  const ys = new Float64Array(nodeCount);
  for (let i = 0; i < nodeCount; i++) {
    xs[i] = (random() - 0.5) * 2;
    ys[i] = (random() - 0.5) * 2;
  }
  if (nodeCount <= 1) {
    return Array.from({ length: nodeCount }, () => ({ x: width / 2, y: height / 2 }));
  }

  const k = Math.sqrt(4 / nodeCount);
  let temperature = 0.25;
  const fx = new Float64Array(nodeCount);
  const fy = new Float64Array(nodeCount);

  for (let step = 0; step < iterations; step++) {
    fx.fill(0);
    fy.fill(0);
    for (let i = 0; i < nodeCount; i++) {
      for (let j = i + 1; j < nodeCount; j++) {
        let dx = xs[i] - xs[j];
        let dy = ys[i] - ys[j];
        let distSq = dx * dx + dy * dy;
        if (distSq < 1e-9) {
          // deterministic nudge for coincident points
          dx = 1e-4 * ((i % 3) - 1 || 1);
          dy = 1e-4 * ((j % 3) - 1 || 1);
          distSq = dx * dx + dy * dy;
        }
        const repulse = (k * k) / distSq;
        fx[i] += dx * repulse;
        fy[i] += dy * repulse;
        fx[j] -= dx * repulse;
        fy[j] -= dy * repulse;
      }
    }
    for (const [a, b] of edges) {
      const dx = xs[a] - xs[b];
      const dy = ys[a] - ys[b];
      const dist = Math.sqrt(dx * dx + dy * dy) || 1e-6;
      const pull = dist / k;
      fx[a] -= (dx / dist) * pull;
      fy[a] -= (dy / dist) * pull;
      fx[b] += (dx / dist) * pull;
      fy[b] += (dy / dist) * pull;
    }
    for (let i = 0; i < nodeCount; i++) {
      const norm = Math.sqrt(fx[i] * fx[i] + fy[i] * fy[i]) || 1;
      const stepSize = Math.min(norm, temperature);
      xs[i] += (fx[i] / norm) * stepSize;
      ys[i] += (fy[i] / norm) * stepSize;
    }
    temperature *= 0.95;
  }

  // scale into the viewport
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (let i = 0; i < nodeCount; i++) {
    minX = Math.min(minX, xs[i]);
    maxX = Math.max(maxX, xs[i]);
    minY = Math.min(minY, ys[i]);
    maxY = Math.max(maxY, ys[i]);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  return Array.from({ length: nodeCount }, (_, i) => ({
    x: padding + ((xs[i] - minX) / spanX) * (width - 2 * padding),
    y: padding + ((ys[i] - minY) / spanY) * (height - 2 * padding),
  }));
}
