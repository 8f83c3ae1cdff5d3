package dlib;

import java.util.*;

public class class_preloader
{
    private Hashtable loaded = new Hashtable();
    private Vector pending = new Vector();

    public void request (String className)
    {
        if (loaded.get(className) == null)
        {
            pending.addElement(className);
        }
    }

    public int preload ()
    {
        int done = 0;
        while (!pending.isEmpty())
        {
            String name = (String) pending.elementAt(0);
            pending.removeElementAt(0);
            if (load(name))
            {
                done = done + 1;
            }
        }
        return( done );
    }

    private boolean load (String name)
    {
        try
        {
            loaded.put(name, Class.forName(name));
            return( true );
        }
        catch (ClassNotFoundException missing)
        {
            return( false );
        }
    }
}
