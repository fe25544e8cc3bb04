const TOAST_MS = 6000;

function container(): HTMLElement {
  let el = document.getElementById("toasts");
  if (!el) {
    el = document.createElement("div");
    el.id = "toasts";
    document.body.appendChild(el);
  }
  return el;
}

/** Show a transient, non-blocking notice. Click dismisses early. */
export function showToast(message: string): HTMLElement {
  const toast = document.createElement("div");
  toast.className = "toast";
  toast.setAttribute("role", "alert");
  toast.textContent = message;
  toast.addEventListener("click", () => toast.remove());
  container().appendChild(toast);
  setTimeout(() => toast.remove(), TOAST_MS);
  return toast;
}
