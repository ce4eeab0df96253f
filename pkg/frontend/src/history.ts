// Exploration history as a tree: undo steps back to the parent, a
// mutation after undo starts a new branch, and the breadcrumb trail of
// the current node is what the timeline renders.

export interface HistoryNode<T> {
  id: number;
  label: string;
  state: T;
  parent: HistoryNode<T> | null;
  children: HistoryNode<T>[];
}

export class HistoryTree<T> {
  root: HistoryNode<T>;
  current: HistoryNode<T>;
  private counter = 0;

  constructor(initial: T, label = "start") {
    this.root = this.node(label, initial, null);
    this.current = this.root;
  }

  private node(label: string, state: T, parent: HistoryNode<T> | null) {
    return { id: this.counter++, label, state, parent, children: [] } as HistoryNode<T>;
  }

  push(label: string, state: T): HistoryNode<T> {
    const child = this.node(label, state, this.current);
    this.current.children.push(child);
    this.current = child;
    return child;
  }

  canUndo(): boolean {
    return this.current.parent !== null;
  }

  undo(): T {
    if (!this.current.parent) throw new Error("nothing to undo");
    this.current = this.current.parent;
    return this.current.state;
  }

  jump(id: number): T {
    const target = this.find(this.root, id);
    if (!target) throw new Error(`no history node ${id}`);
    this.current = target;
    return target.state;
  }

  private find(node: HistoryNode<T>, id: number): HistoryNode<T> | null {
    if (node.id === id) return node;
    for (const child of node.children) {
      const hit = this.find(child, id);
      if (hit) return hit;
    }
    return null;
  }

  breadcrumb(): HistoryNode<T>[] {
    const trail: HistoryNode<T>[] = [];
    let cur: HistoryNode<T> | null = this.current;
    while (cur) {
      trail.unshift(cur);
      cur = cur.parent;
    }
    return trail;
  }

  /** Flat listing for the breadcrumb graph: (depth, node, onTrail). */
  outline(): { depth: number; node: HistoryNode<T>; onTrail: boolean }[] {
    const trail = new Set(this.breadcrumb().map((n) => n.id));
    const out: { depth: number; node: HistoryNode<T>; onTrail: boolean }[] = [];
    const walk = (node: HistoryNode<T>, depth: number) => {
      out.push({ depth, node, onTrail: trail.has(node.id) });
      for (const child of node.children) walk(child, depth + 1);
    };
    walk(this.root, 0);
    return out;
  }
}
