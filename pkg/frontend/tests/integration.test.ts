// The bundled sample is verbatim service output, so rendering it checks the
// explorer against the real wire format end to end.

import { beforeEach, describe, expect, it } from "vitest";

import { PreviewAudio, PreviewPlayer } from "../src/audio";
import { ExplorerView } from "../src/render";
import { sampleResponse } from "../src/sample";
import { validateResponse } from "../src/types";

class SilentAudio implements PreviewAudio {
  currentTime = 0;
  duration = 1;
  volume = 1;
  constructor(public url: string) {}
  play(): void {}
  pause(): void {}
  addEventListener(): void {}
}

let root: HTMLElement;
let view: ExplorerView;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app")!;
  view = new ExplorerView(root, new PreviewPlayer((url) => new SilentAudio(url)));
});

describe("real service output", () => {
  it("passes the payload shape check", () => {
    expect(validateResponse(sampleResponse())).toBe(true);
  });

  it("renders without a banner", () => {
    view.render(sampleResponse(), 0);
    expect(root.querySelector<HTMLElement>(".banner")!.hidden).toBe(true);
    const response = sampleResponse();
    expect(root.querySelectorAll("circle.node")).toHaveLength(response.graph.nodes.length);
    expect(root.querySelectorAll(".facet-chip")).toHaveLength(
      response.clusters.filter((c) => !c.pruned).length,
    );
  });

  it("every cluster member id resolves to a graph node", () => {
    const response = sampleResponse();
    const ids = new Set(response.graph.nodes.map((n) => n.id));
    for (const cluster of response.clusters) {
      for (const member of cluster.members) {
        expect(ids.has(member)).toBe(true);
      }
    }
    for (const unclustered of response.unclustered) {
      expect(ids.has(unclustered)).toBe(true);
    }
  });
});
