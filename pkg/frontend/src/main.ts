import "./style.css";
import { NetworkError, createProject, getProject } from "./api";
import { OntologyPanel } from "./ontology";
import { showToast } from "./toast";
import { Workbench } from "./workbench";
import type { ProjectDoc } from "./types";

const STORAGE_KEY = "tedei.projectId";

function rememberedId(): string | null {
  try {
    return localStorage.getItem(STORAGE_KEY);
  } catch {
    return null;
  }
}

function remember(id: string): void {
  try {
    localStorage.setItem(STORAGE_KEY, id);
  } catch {
    // private mode etc.; the project still works for this tab
  }
}

// Reuse the project from the last visit when the server still knows it,
// otherwise start a fresh one.
async function ensureProject(): Promise<ProjectDoc> {
  const known = rememberedId();
  if (known) {
    try {
      return await getProject(known);
    } catch (err) {
      if (err instanceof NetworkError) throw err;
      // 404: the data directory moved on without us
    }
  }
  const doc = await createProject(`Ontology ${new Date().toISOString().slice(0, 10)}`);
  remember(doc.id);
  return doc;
}

async function boot(): Promise<void> {
  const app = document.getElementById("app");
  if (!app) return;

  const workbench = new Workbench();
  const ontology = new OntologyPanel();

  const header = document.createElement("header");
  header.className = "app-header";
  const title = document.createElement("h1");
  title.textContent = "tedei";
  const subtitle = document.createElement("p");
  subtitle.textContent = "controlled English in, OWL axioms out";
  const projectLabel = document.createElement("span");
  projectLabel.className = "project-label";
  const newProject = document.createElement("button");
  newProject.textContent = "New project";
  newProject.type = "button";
  header.append(title, subtitle, projectLabel, newProject);

  const columns = document.createElement("main");
  columns.className = "columns";
  columns.append(workbench.root, ontology.root);
  app.append(header, columns);

  const adopt = (doc: ProjectDoc) => {
    workbench.projectId = doc.id;
    projectLabel.textContent = doc.name;
    projectLabel.title = doc.id;
    void ontology.refresh(doc.id);
  };

  workbench.onAccepted = () => void ontology.refresh(workbench.projectId);
  newProject.addEventListener("click", () => {
    void createProject(`Ontology ${new Date().toISOString().slice(0, 10)}`)
      .then((doc) => {
        remember(doc.id);
        adopt(doc);
      })
      .catch(() => showToast("Could not create a project."));
  });

  try {
    adopt(await ensureProject());
  } catch {
    showToast("Could not reach the service; analysis will work once it is back.");
  }
}

void boot();
