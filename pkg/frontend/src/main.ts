import { getHealth, postCluster } from "./api";
import { browserAudioFactory, PreviewPlayer } from "./audio";
import { ExplorerView } from "./render";
import { sampleResponse } from "./sample";
import "./style.css";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const view = new ExplorerView(root, new PreviewPlayer(browserAudioFactory));

declare global {
  interface Window {
    explorer: ExplorerView;
  }
}
window.explorer = view;

async function boot(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const ids = params.get("ids");
  if (ids) {
    // cluster a result set against the service's loaded corpus
    await getHealth();
    const response = await postCluster({
      document_ids: ids.split(","),
      seed: Number(params.get("seed") ?? "0"),
      prune: params.get("prune") === "1",
    });
    view.render(response, Number(params.get("layout") ?? "0"));
    return;
  }
  view.render(sampleResponse(), 0);
}

boot().catch((error) => {
  view.render({ error: String(error) });
});
